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


#include "dagstack/io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "dagstack/error.h"

namespace dagstack {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) {
  throw Error(ErrorCode::kParseError, msg);
}

int json_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) parse_fail(what + " must be an integer");
  const auto v = j.get<long long>();
  if (v < 0 || v > 100'000'000) parse_fail(what + " out of range");
  return static_cast<int>(v);
}

std::string edge_key(const Edge& e) {
  return std::to_string(e.tail) + "-" + std::to_string(e.head);
}

}  // namespace

DirectedGraph graph_from_json(const Json& j) {
  if (!j.is_object()) parse_fail("graph must be a JSON object");
  if (!j.contains("n")) parse_fail("graph is missing \"n\"");
  if (!j.contains("edges")) parse_fail("graph is missing \"edges\"");
  const int n = json_int(j.at("n"), "\"n\"");
  const Json& je = j.at("edges");
  if (!je.is_array()) parse_fail("\"edges\" must be an array");
  std::vector<Edge> edges;
  edges.reserve(je.size());
  for (std::size_t i = 0; i < je.size(); ++i) {
    const Json& e = je[i];
    const std::string what = "edges[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 2) parse_fail(what + " must be a pair");
    edges.push_back({json_int(e[0], what), json_int(e[1], what)});
  }
  std::vector<std::string> names;
  if (j.contains("names")) {
    const Json& jn = j.at("names");
    if (!jn.is_array()) parse_fail("\"names\" must be an array");
    for (const Json& s : jn) {
      if (!s.is_string()) parse_fail("names must be strings");
      names.push_back(s.get<std::string>());
    }
  }
  return DirectedGraph(n, std::move(edges), std::move(names));
}

DirectedGraph parse_graph_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_fail("invalid JSON at byte " + std::to_string(e.byte) + ": " +
               e.what());
  }
  return graph_from_json(j);
}

Json graph_to_json(const DirectedGraph& g) {
  Json j;
  j["n"] = g.num_vertices();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.tail, e.head});
  j["edges"] = std::move(edges);
  if (!g.names().empty()) j["names"] = g.names();
  return j;
}

DirectedGraph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  int declared = -1;
  int max_id = -1;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto number = [&](const std::string& t) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (ec != std::errc() || ptr != t.data() + t.size() || v < 0) {
        parse_fail("line " + std::to_string(line_no) + ": \"" + t +
                   "\" is not a vertex id");
      }
      return v;
    };
    if (tok.size() != 2) {
      parse_fail("line " + std::to_string(line_no) +
                 ": expected two fields, got " + std::to_string(tok.size()));
    }
    if (tok[0] == "n") {
      if (declared >= 0 || !edges.empty()) {
        parse_fail("line " + std::to_string(line_no) +
                   ": the vertex count must come first and only once");
      }
      declared = number(tok[1]);
      continue;
    }
    Edge e{number(tok[0]), number(tok[1])};
    max_id = std::max({max_id, e.tail, e.head});
    edges.push_back(e);
  }
  const int n = declared >= 0 ? declared : max_id + 1;
  return DirectedGraph(n, std::move(edges));
}

std::string graph_to_edge_list(const DirectedGraph& g) {
  std::string out = "n " + std::to_string(g.num_vertices()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.tail) + " " + std::to_string(e.head) + "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path);
}

DirectedGraph load_graph(const std::string& path, GraphFormat format) {
  const std::string text = read_file(path);
  if (format == GraphFormat::kAuto) {
    const auto first = text.find_first_not_of(" \t\r\n");
    format = first != std::string::npos && text[first] == '{'
                 ? GraphFormat::kJson
                 : GraphFormat::kEdgeList;
  }
  return format == GraphFormat::kJson ? parse_graph_json(text)
                                      : parse_edge_list(text);
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json layout_to_json(const Layout& l) {
  Json j;
  j["graph"] = graph_to_json(l.graph);
  j["ordering"] = l.ordering;
  Json stacks = Json::object();
  for (int id = 0; id < l.graph.num_edges(); ++id) {
    stacks[edge_key(l.graph.edge(id))] = l.stack_of_edge[id];
  }
  j["stacks"] = std::move(stacks);
  j["num_stacks"] = l.num_stacks;
  return j;
}

Layout layout_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("graph") || !j.contains("ordering") ||
      !j.contains("stacks")) {
    parse_fail("layout needs \"graph\", \"ordering\" and \"stacks\"");
  }
  Layout l;
  l.graph = graph_from_json(j.at("graph"));
  const Json& jo = j.at("ordering");
  if (!jo.is_array()) parse_fail("\"ordering\" must be an array");
  for (const Json& v : jo) l.ordering.push_back(json_int(v, "ordering entry"));
  const Json& js = j.at("stacks");
  if (!js.is_object()) parse_fail("\"stacks\" must be an object");
  l.stack_of_edge.assign(l.graph.num_edges(), -1);
  for (auto it = js.begin(); it != js.end(); ++it) {
    const std::string& key = it.key();
    const auto dash = key.find('-');
    int u = -1;
    int v = -1;
    if (dash != std::string::npos) {
      std::from_chars(key.data(), key.data() + dash, u);
      std::from_chars(key.data() + dash + 1, key.data() + key.size(), v);
    }
    auto id = u >= 0 && v >= 0 && u < l.graph.num_vertices() &&
                      v < l.graph.num_vertices()
                  ? l.graph.edge_id(u, v)
                  : std::nullopt;
    if (!id) parse_fail("stack key \"" + key + "\" is not an edge");
    l.stack_of_edge[*id] = json_int(it.value(), "stack id");
  }
  int max_stack = -1;
  for (int s : l.stack_of_edge) max_stack = std::max(max_stack, s);
  l.num_stacks = j.contains("num_stacks")
                     ? json_int(j.at("num_stacks"), "\"num_stacks\"")
                     : max_stack + 1;
  return l;
}

Json sequence_to_json(const ConstructionSequence& seq) {
  Json j;
  j["base"] = {seq.base.tail, seq.base.head};
  Json steps = Json::array();
  for (const auto& st : seq.steps) {
    steps.push_back({{"child", st.child},
                     {"parent", {st.parent_edge.tail, st.parent_edge.head}},
                     {"type", stacking_type_name(st.type)}});
  }
  j["steps"] = std::move(steps);
  return j;
}

Json partition_to_json(const DirectedHPartition& hp) {
  Json j;
  j["parts"] = hp.parts;
  j["apex"] = hp.apex;
  j["q1"] = hp.q1;
  j["q2"] = hp.q2;
  j["quotient"] = graph_to_json(hp.quotient);
  Json certs = Json::array();
  for (const auto& c : hp.certificates) {
    certs.push_back({{"part", c.part}, {"cover", c.cover}, {"scope", c.scope}});
  }
  j["certificates"] = std::move(certs);
  return j;
}

Json adversary_spec_to_json(const AdversarySpec& spec) {
  Json j;
  j["k"] = spec.k;
  Json r = Json::array();
  for (const auto& x : spec.r) r.push_back(x.str());
  j["r"] = std::move(r);
  j["N"] = spec.N.str();
  j["n_override"] =
      spec.n_override ? Json(*spec.n_override) : Json(nullptr);
  j["width_used"] = spec.width_used;
  j["level_sizes"] = spec.level_sizes;
  Json m = Json::array();
  for (const auto& level : spec.matchings) {
    Json edges = Json::array();
    for (const Edge& e : level) edges.push_back({e.tail, e.head});
    m.push_back(std::move(edges));
  }
  j["matchings"] = std::move(m);
  j["base"] = {spec.base.tail, spec.base.head};
  j["guarantee"] = spec.guarantee ? "twist >= k" : "none";
  return j;
}

Json bound_report_to_json(const BoundReport& r) {
  return Json{{"h", r.h},           {"f", r.f},
              {"w", r.w},           {"s", r.s},
              {"p", r.p},           {"t", r.t},
              {"stacks", r.stacks}, {"bound", r.bound},
              {"paper_ceiling", r.paper_ceiling}};
}

std::string quotient_to_dot(const DirectedHPartition& hp) {
  std::ostringstream out;
  out << "digraph quotient {\n";
  for (int p = 0; p < hp.num_parts(); ++p) {
    out << "  " << p << " [label=\"P" << p << " apex " << hp.apex[p] << " ("
        << hp.parts[p].size() << ")\"];\n";
  }
  for (const Edge& e : hp.quotient.edges()) {
    out << "  " << e.tail << " -> " << e.head << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string block_cut_tree_to_dot(const DirectedGraph& g,
                                  const BlockCutTree& bct) {
  std::ostringstream out;
  out << "graph block_cut_tree {\n";
  for (int b = 0; b < bct.num_blocks(); ++b) {
    out << "  B" << b << " [shape=box,label=\"B" << b << ":";
    for (VertexId v : bct.block_vertices[b]) out << ' ' << g.vertex_label(v);
    out << "\"" << (b == bct.root ? ",peripheries=2" : "") << "];\n";
  }
  for (VertexId c : bct.cut_vertices) {
    out << "  C" << c << " [shape=circle,label=\"" << g.vertex_label(c)
        << "\"];\n";
  }
  for (const auto& [b, c] : bct.tree_edges) {
    out << "  B" << b << " -- C" << c << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace dagstack
