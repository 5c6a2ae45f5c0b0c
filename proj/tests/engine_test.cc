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

#include <algorithm>
#include <map>

#include "dagstack/adversary.h"
#include "dagstack/block_cut_tree.h"
#include "dagstack/engine.h"
#include "dagstack/error.h"
#include "dagstack/oracle.h"
#include "dagstack/outerplanar.h"
#include "dagstack/random_graphs.h"

namespace dagstack {
namespace {

// Every forest is a union of vertex-disjoint stars centred as recorded.
void expect_star_forests(std::span<const Edge> edges,
                         const StarForestDecomposition& d) {
  std::vector<int> seen(edges.size(), 0);
  for (int f = 0; f < d.num_forests(); ++f) {
    std::map<VertexId, int> role;  // 1 centre, 2 leaf
    for (int i : d.forests[f]) {
      ++seen[i];
      EXPECT_EQ(d.forest_of[i], f);
      const Edge& e = edges[i];
      const VertexId c = d.center[i];
      ASSERT_TRUE(c == e.tail || c == e.head);
      const VertexId leaf = c == e.tail ? e.head : e.tail;
      EXPECT_NE(role[c], 2) << "centre reused as a leaf";
      role[c] = 1;
      EXPECT_EQ(role[leaf], 0) << "leaf in two stars or a centre";
      role[leaf] = 2;
    }
  }
  for (int s : seen) EXPECT_EQ(s, 1);
}

TEST(TransitivePart, Examples) {
  const DirectedGraph g(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 2}, {1, 4},
                            {4, 2}});
  const auto seq = build_construction_sequence(g, {0, 1});
  const auto t = build_construction_tree(seq, g);
  const auto l = layout_transitive_part(g, t, 2);
  EXPECT_EQ(l.graph.num_vertices(), 3);
  EXPECT_EQ(l.num_stacks, 1);
  EXPECT_TRUE(verify_layout(l).ok());

  const DirectedGraph tri(3, {{0, 1}, {0, 2}, {1, 2}});
  const auto t2 =
      build_construction_tree(build_construction_sequence(tri, {0, 1}), tri);
  const auto leaf = layout_transitive_part(tri, t2, 2);
  EXPECT_EQ(leaf.graph.num_vertices(), 1);
  EXPECT_EQ(leaf.num_stacks, 0);
  EXPECT_THROW(layout_transitive_part(g, t, 3), Error);
}

TEST(TransitivePart, OneStackForEveryMonotoneVertex) {
  Rng rng(59);
  for (int it = 0; it < 40; ++it) {
    const auto g = random_maximal_outerplanar_dag(
        rng, 2 + static_cast<int>(uniform_below(rng, 80)));
    const auto seq = build_construction_sequence(g, g.edge(0));
    const auto t = build_construction_tree(seq, g);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (t.label[v] != Label::kM) continue;
      const auto l = layout_transitive_part(g, t, v);
      EXPECT_LE(l.num_stacks, 1);
      EXPECT_TRUE(verify_layout(l).ok());
    }
  }
}

TEST(MonotoneBlock, Examples) {
  const auto r = layout_monotone_block(DirectedGraph(2, {{0, 1}}), {0, 1});
  EXPECT_EQ(r.layout.num_stacks, 1);
  EXPECT_EQ(r.layout.ordering.size(), 2u);
  EXPECT_THROW(layout_monotone_block(gen_three_fence(), {0, 1}), Error);
}

TEST(MonotoneBlock, SmallBlocksHaveSmallTwist) {
  Rng rng(61);
  for (int it = 0; it < 30; ++it) {
    const auto g = random_monotone_outerplanar_dag(
        rng, 3 + static_cast<int>(uniform_below(rng, 10)));
    const auto r = layout_monotone_block(g, {0, 1});
    EXPECT_TRUE(verify_layout(r.layout).ok());
    EXPECT_LE(twist_of_ordering(g, r.layout.ordering).size, 4);
    // Base endpoints stay in base order.
    const auto pos = r.layout.positions();
    EXPECT_LT(pos[0], pos[1]);
  }
}

TEST(MonotoneBlock, HeuristicIsValid) {
  Rng rng(67);
  BlockLayoutOptions opt;
  opt.strategy = BlockStrategy::kHeuristic;
  for (int it = 0; it < 20; ++it) {
    const auto g = random_monotone_outerplanar_dag(rng, 150);
    const auto r = layout_monotone_block(g, {0, 1}, opt);
    EXPECT_TRUE(verify_layout(r.layout).ok());
    EXPECT_EQ(r.used, BlockStrategy::kHeuristic);
  }
}

Layout greedy_block(const DirectedGraph& g, const BlockCutTree& bct, int b) {
  const auto sub = edge_subgraph(g, bct.blocks[b]);
  return greedy_stack_assignment(sub.graph, topological_order(sub.graph));
}

TEST(Combine, StarOfBridges) {
  const DirectedGraph g(4, {{0, 1}, {0, 2}, {3, 0}});
  const auto bct = block_cut_tree(g);
  std::vector<std::optional<Layout>> per(bct.num_blocks());
  for (int b = 0; b < bct.num_blocks(); ++b) per[b] = greedy_block(g, bct, b);
  const auto l = combine_block_layouts(g, bct, per);
  EXPECT_TRUE(verify_layout(l).ok());
  EXPECT_LE(l.num_stacks, 4);
  per[1].reset();
  EXPECT_THROW(combine_block_layouts(g, bct, per), Error);
}

TEST(Combine, SingleBlockUnchanged) {
  const DirectedGraph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  const auto bct = block_cut_tree(g);
  ASSERT_EQ(bct.num_blocks(), 1);
  const auto own = greedy_block(g, bct, 0);
  const auto l = combine_block_layouts(g, bct, {own});
  EXPECT_TRUE(verify_layout(l).ok());
  EXPECT_EQ(l.num_stacks, own.num_stacks);
}

TEST(Combine, AtMostTwoSPlusTwo) {
  Rng rng(71);
  for (int it = 0; it < 40; ++it) {
    const auto g = random_multi_block_dag(
        rng, 2 + static_cast<int>(uniform_below(rng, 12)), 9);
    const auto bct = block_cut_tree(g);
    std::vector<std::optional<Layout>> per(bct.num_blocks());
    int s = 0;
    for (int b = 0; b < bct.num_blocks(); ++b) {
      per[b] = greedy_block(g, bct, b);
      s = std::max(s, per[b]->num_stacks);
    }
    const auto l = combine_block_layouts(g, bct, per);
    EXPECT_TRUE(verify_layout(l).ok());
    EXPECT_LE(l.num_stacks, 2 * s + 2);
  }
}

TEST(StarForests, Examples) {
  const std::vector<Edge> star = {{0, 1}, {0, 2}, {3, 0}};
  EXPECT_EQ(star_forest_decomposition(star).num_forests(), 1);
  const std::vector<Edge> path = {{0, 1}, {1, 2}, {2, 3}, {3, 4}};
  const auto dp = star_forest_decomposition(path);
  EXPECT_EQ(dp.num_forests(), 2);
  expect_star_forests(path, dp);
  const std::vector<Edge> tri = {{0, 1}, {1, 2}, {0, 2}};
  const auto dt = star_forest_decomposition(tri);
  EXPECT_EQ(dt.num_forests(), 2);
  expect_star_forests(tri, dt);
  EXPECT_EQ(star_forest_decomposition(std::vector<Edge>{}).num_forests(), 0);
}

TEST(StarForests, AtMostFourOnOuterplanarGraphs) {
  Rng rng(73);
  for (int it = 0; it < 60; ++it) {
    const auto g = random_outerplanar_dag(
        rng, 2 + static_cast<int>(uniform_below(rng, 120)));
    const std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    const auto d = star_forest_decomposition(edges);
    EXPECT_LE(d.num_forests(), 4);
    expect_star_forests(edges, d);
  }
  const std::vector<Edge> k4 = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
                                {2, 3}};
  EXPECT_THROW(star_forest_decomposition(k4), Error);
}

TEST(Expand, SingletonParts) {
  Rng rng(79);
  const auto g = random_maximal_outerplanar_dag(rng, 12);
  DirectedHPartition hp;
  const int n = g.num_vertices();
  for (VertexId v = 0; v < n; ++v) {
    hp.parts.push_back({v});
    hp.part_of.push_back(v);
    hp.apex.push_back(v);
  }
  hp.quotient = g;
  std::vector<Layout> parts;
  std::vector<CutCoverCertificate> cover;
  for (VertexId v = 0; v < n; ++v) {
    parts.push_back(Layout{DirectedGraph(1), {0}, {}, 0});
    cover.push_back({v, {v}, {}});
  }
  const auto host = greedy_stack_assignment(g, topological_order(g));
  const auto ex = expand_partition_layout(g, hp, host, parts, cover);
  EXPECT_TRUE(verify_layout(ex.layout).ok());
  EXPECT_EQ(ex.layout.ordering, host.ordering);
  EXPECT_EQ(ex.part_stacks, 0);
  EXPECT_LE(ex.layout.num_stacks, ex.forests * host.num_stacks);
}

TEST(Pipeline, Examples) {
  const DirectedGraph forest(7, {{0, 1}, {0, 2}, {2, 3}, {4, 5}, {6, 5}});
  const auto rf = layout_outerplanar_dag(forest);
  EXPECT_TRUE(verify_layout(rf.layout).ok());
  EXPECT_EQ(rf.layout.num_stacks, 1);

  const auto fence = layout_outerplanar_dag(gen_three_fence());
  EXPECT_TRUE(verify_layout(fence.layout).ok());
  EXPECT_GE(fence.layout.num_stacks, 3);

  EXPECT_THROW(layout_outerplanar_dag(gen_path_matching(3)), Error);
  EXPECT_THROW(
      layout_outerplanar_dag(DirectedGraph(3, {{0, 1}, {1, 2}, {2, 0}})),
      Error);
  EXPECT_EQ(layout_outerplanar_dag(DirectedGraph(3)).layout.num_stacks, 0);
}

TEST(Pipeline, RandomGraphsAreValidAndWithinBound) {
  Rng rng(83);
  for (int it = 0; it < 60; ++it) {
    const auto g = random_outerplanar_dag(
        rng, 1 + static_cast<int>(uniform_below(rng, 150)));
    const auto r = layout_outerplanar_dag(g);
    EXPECT_TRUE(verify_layout(r.layout).ok());
    EXPECT_EQ(r.layout.graph, g);
    EXPECT_LE(r.layout.num_stacks, r.report.paper_ceiling);
    EXPECT_EQ(r.report.bound,
              4LL * r.report.p * r.report.t *
                  (1LL * r.report.f * r.report.w * r.report.h + r.report.s));
    EXPECT_LE(r.layout.num_stacks, r.report.bound);
    EXPECT_LE(r.report.w, 4);
    EXPECT_LE(r.report.f, 4);
    EXPECT_LE(r.report.s, 1);
  }
}

TEST(Pipeline, RandomForestsUseOneStack) {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 300));
    std::vector<Edge> edges;
    for (VertexId v = 1; v < n; ++v) {
      if (coin(rng, 1, 10)) continue;
      const auto u = static_cast<VertexId>(uniform_below(rng, v));
      edges.push_back(coin(rng, 1, 2) ? Edge{u, v} : Edge{v, u});
    }
    const DirectedGraph g(n, edges);
    const auto r = layout_outerplanar_dag(g);
    ASSERT_TRUE(verify_layout(r.layout).ok());
    EXPECT_EQ(r.layout.num_stacks, edges.empty() ? 0 : 1);
  }
}

TEST(Pipeline, NeverBeatsTheOracle) {
  Rng rng(89);
  for (int it = 0; it < 30; ++it) {
    const auto g = random_outerplanar_dag(
        rng, 3 + static_cast<int>(uniform_below(rng, 7)));
    const auto r = layout_outerplanar_dag(g);
    EXPECT_GE(r.layout.num_stacks, exact_stack_number(g).value);
  }
}

TEST(Pipeline, BaseEdgeChoiceKeepsValidity) {
  Rng rng(97);
  const auto g = random_maximal_outerplanar_dag(rng, 40);
  for (int e = 0; e < g.num_edges(); e += 7) {
    PipelineConfig cfg;
    cfg.base_edge = g.edge(e);
    EXPECT_TRUE(verify_layout(layout_outerplanar_dag(g, cfg).layout).ok());
  }
}

}  // namespace
}  // namespace dagstack
