// Copyright 2026 The dagstack Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <set>
#include <string>

#include "dagstack/adversary.h"
#include "dagstack/engine.h"
#include "dagstack/error.h"
#include "dagstack/io.h"
#include "dagstack/layout.h"
#include "dagstack/random_graphs.h"

namespace dagstack {
namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

int count(const std::string& hay, const std::string& needle) {
  int c = 0;
  for (auto p = hay.find(needle); p != std::string::npos;
       p = hay.find(needle, p + 1)) {
    ++c;
  }
  return c;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

TEST(GraphJson, Examples) {
  const auto g = parse_graph_json(R"({"n":2,"edges":[[0,1]]})");
  EXPECT_EQ(g.num_vertices(), 2);
  EXPECT_EQ(g.num_edges(), 1);
  EXPECT_EQ(code_of([] { parse_graph_json(R"({"n":2,"edges":[[0,0]]})"); }),
            ErrorCode::kInvariantViolation);
  EXPECT_EQ(code_of([] { parse_graph_json(R"({"n":2,"edges":[[0,1]])"); }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_graph_json(R"({"edges":[]})"); }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_graph_json(R"({"n":2,"edges":[[0]]})"); }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_graph_json(R"({"n":-1,"edges":[]})"); }),
            ErrorCode::kParseError);
}

TEST(EdgeList, Examples) {
  const auto g = parse_edge_list("0 1\n1 2");
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.num_edges(), 2);
  EXPECT_TRUE(g.has_edge(1, 2));
  const auto h = parse_edge_list("# a comment\nn 5\n\n0 1  # trailing\n");
  EXPECT_EQ(h.num_vertices(), 5);
  EXPECT_EQ(h.num_edges(), 1);
  try {
    parse_edge_list("0 1\n1 2 3\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_EQ(code_of([] { parse_edge_list("0 x\n"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_edge_list("0 0\n"); }),
            ErrorCode::kInvariantViolation);
  EXPECT_EQ(parse_edge_list(graph_to_edge_list(gen_three_fence())),
            gen_three_fence());
}

TEST(GraphJson, CanonicalRoundTripIsByteIdentical) {
  Rng rng(103);
  for (int it = 0; it < 20; ++it) {
    const auto g = random_outerplanar_dag(rng, 30);
    const std::string once = canonical_dump(graph_to_json(g));
    const std::string twice =
        canonical_dump(graph_to_json(parse_graph_json(once)));
    EXPECT_EQ(once, twice);
    EXPECT_EQ(once.back(), '\n');
    EXPECT_EQ(once.find('\r'), std::string::npos);
  }
  const auto named = gen_three_fence();
  EXPECT_EQ(parse_graph_json(canonical_dump(graph_to_json(named))).names(),
            named.names());
}

TEST(Files, LoadAndWrite) {
  const std::string json_path = temp_path("dagstack_io_test.json");
  const std::string list_path = temp_path("dagstack_io_test.txt");
  write_file(json_path, canonical_dump(graph_to_json(gen_path_matching(3))));
  write_file(list_path, "0 1\n1 2\n");
  EXPECT_EQ(load_graph(json_path), gen_path_matching(3));
  EXPECT_EQ(load_graph(list_path).num_edges(), 2);
  EXPECT_EQ(code_of([&] { load_graph(list_path, GraphFormat::kJson); }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { load_graph("/nonexistent/dir/graph.json"); }),
            ErrorCode::kIoError);
  EXPECT_EQ(code_of([] { write_file("/nonexistent/dir/out.json", "x"); }),
            ErrorCode::kIoError);
  std::remove(json_path.c_str());
  std::remove(list_path.c_str());
}

TEST(LayoutJson, RoundTrip) {
  const auto r = layout_outerplanar_dag(gen_three_fence());
  const std::string text = canonical_dump(layout_to_json(r.layout));
  const Layout back = layout_from_json(Json::parse(text));
  EXPECT_EQ(back.graph, r.layout.graph);
  EXPECT_EQ(back.ordering, r.layout.ordering);
  EXPECT_EQ(back.stack_of_edge, r.layout.stack_of_edge);
  EXPECT_EQ(back.num_stacks, r.layout.num_stacks);
  EXPECT_EQ(canonical_dump(layout_to_json(back)), text);
  EXPECT_EQ(code_of([] {
              layout_from_json(Json::parse(
                  R"({"graph":{"n":2,"edges":[[0,1]]},"ordering":[0,1],)"
                  R"("stacks":{"1-0":0}})"));
            }),
            ErrorCode::kParseError);
}

TEST(Json, OtherSerialisations) {
  const auto inst = gen_unbounded_twist(2, 2);
  const Json spec = adversary_spec_to_json(inst.spec);
  EXPECT_EQ(spec["guarantee"], "none");
  EXPECT_EQ(spec["N"], "32");
  EXPECT_EQ(spec["matchings"].size(), 3u);
  const Json full = adversary_spec_to_json(gen_unbounded_twist(1).spec);
  EXPECT_EQ(full["guarantee"], "twist >= k");

  BoundReport rep;
  rep.h = 3;
  const Json jr = bound_report_to_json(rep);
  for (const char* key :
       {"h", "f", "w", "s", "p", "t", "stacks", "paper_ceiling"}) {
    EXPECT_TRUE(jr.contains(key)) << key;
  }
  const auto g = gen_three_fence();
  const Json seq = sequence_to_json(build_construction_sequence(g, {0, 1}));
  EXPECT_EQ(seq["steps"].size(), 6u);
}

TEST(Dot, QuotientAndBlockCutTree) {
  Rng rng(107);
  const auto g = random_maximal_outerplanar_dag(rng, 25);
  const auto seq = build_construction_sequence(g, g.edge(0));
  const auto tree = build_construction_tree(seq, g);
  const auto hp = construct_directed_h_partition(g, seq, tree);
  const std::string q = quotient_to_dot(hp);
  EXPECT_EQ(q.rfind("digraph", 0), 0u);
  EXPECT_EQ(count(q, "->"), hp.quotient.num_edges());
  const auto bct = block_cut_tree(hp.quotient);
  const std::string b = block_cut_tree_to_dot(hp.quotient, bct);
  EXPECT_EQ(count(b, " -- "), static_cast<int>(bct.tree_edges.size()));
}

TEST(Svg, ElementCounts) {
  const auto g = gen_path_matching(3);
  const auto l = greedy_stack_assignment(g, topological_order(g));
  const std::string svg = render_arc_diagram_svg(l);
  EXPECT_EQ(count(svg, "<circle"), 6);
  EXPECT_EQ(count(svg, "class=\"edge\""), g.num_edges());
  std::set<std::string> colours;
  for (auto p = svg.find("class=\"edge\""); p != std::string::npos;
       p = svg.find("class=\"edge\"", p + 1)) {
    const auto s = svg.find("stroke=\"", p) + 8;
    colours.insert(svg.substr(s, 7));
  }
  EXPECT_EQ(colours.size(), 3u);
  EXPECT_EQ(svg, render_arc_diagram_svg(l));

  const Layout empty{DirectedGraph(3), {0, 1, 2}, {}, 0};
  const std::string base = render_arc_diagram_svg(empty);
  EXPECT_EQ(count(base, "<line"), 1);
  EXPECT_EQ(count(base, "class=\"edge\""), 0);

  const DirectedGraph forest(5, {{0, 1}, {1, 2}, {0, 3}, {3, 4}});
  const auto one = greedy_stack_assignment(forest, std::vector<VertexId>{0, 3, 4, 1, 2});
  ASSERT_EQ(one.num_stacks, 1);
  const std::string fs = render_arc_diagram_svg(one);
  EXPECT_EQ(count(fs, "stroke=\"#1f77b4\""), 4);
}

}  // namespace
}  // namespace dagstack
