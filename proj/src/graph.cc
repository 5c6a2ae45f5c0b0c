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

#include "dagstack/graph.h"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "dagstack/error.h"

namespace dagstack {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kCyclicGraph: return "CyclicGraph";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kNotOuterplanar: return "NotOuterplanar";
    case ErrorCode::kNotTwoTree: return "NotTwoTree";
    case ErrorCode::kNotTwoTreeBlock: return "NotTwoTreeBlock";
    case ErrorCode::kNotMaximalOuterplanar: return "NotMaximalOuterplanar";
    case ErrorCode::kEdgeMissing: return "EdgeMissing";
    case ErrorCode::kWrongOrientation: return "WrongOrientation";
    case ErrorCode::kCyclicStackingFound: return "CyclicStackingFound";
    case ErrorCode::kBadOrdering: return "BadOrdering";
    case ErrorCode::kNotTopological: return "NotTopological";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNonPositive: return "NonPositive";
    case ErrorCode::kMixedDirections: return "MixedDirections";
    case ErrorCode::kNotAPartition: return "NotAPartition";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kNotMonotoneVertex: return "NotMonotoneVertex";
    case ErrorCode::kNotMonotone: return "NotMonotone";
    case ErrorCode::kMissingBlockLayout: return "MissingBlockLayout";
    case ErrorCode::kCertificateInsufficient: return "CertificateInsufficient";
    case ErrorCode::kSpanConflict: return "SpanConflict";
    case ErrorCode::kPremiseViolated: return "PremiseViolated";
    case ErrorCode::kSizeExceeded: return "SizeExceeded";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kDuplicateValues: return "DuplicateValues";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

DirectedGraph::DirectedGraph(int n, std::vector<Edge> edges,
                             std::vector<std::string> names)
    : n_(n), edges_(std::move(edges)), names_(std::move(names)) {
  if (n < 0) {
    throw Error(ErrorCode::kInvariantViolation, "negative vertex count");
  }
  if (!names_.empty() && static_cast<int>(names_.size()) != n) {
    throw Error(ErrorCode::kInvariantViolation,
                "names list has " + std::to_string(names_.size()) +
                    " entries for " + std::to_string(n) + " vertices");
  }
  std::sort(edges_.begin(), edges_.end());
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const Edge& e : edges_) {
    if (e.tail < 0 || e.head < 0 || e.tail >= n || e.head >= n) {
      throw Error(ErrorCode::kInvariantViolation,
                  "edge endpoint out of range: " + std::to_string(e.tail) +
                      "->" + std::to_string(e.head));
    }
    if (e.tail == e.head) {
      throw Error(ErrorCode::kInvariantViolation,
                  "loop at vertex " + std::to_string(e.tail));
    }
    auto key = std::minmax(e.tail, e.head);
    if (!seen.insert(key).second) {
      throw Error(ErrorCode::kInvariantViolation,
                  "parallel edge between " + std::to_string(key.first) +
                      " and " + std::to_string(key.second));
    }
  }
  out_.assign(n, {});
  in_.assign(n, {});
  nbr_.assign(n, {});
  inc_.assign(n, {});
  std::vector<std::vector<std::pair<VertexId, int>>> adj(n);
  for (int id = 0; id < num_edges(); ++id) {
    const Edge& e = edges_[id];
    out_[e.tail].push_back(e.head);
    in_[e.head].push_back(e.tail);
    adj[e.tail].emplace_back(e.head, id);
    adj[e.head].emplace_back(e.tail, id);
  }
  for (VertexId v = 0; v < n; ++v) {
    std::sort(out_[v].begin(), out_[v].end());
    std::sort(in_[v].begin(), in_[v].end());
    std::sort(adj[v].begin(), adj[v].end());
    for (auto [u, id] : adj[v]) {
      nbr_[v].push_back(u);
      inc_[v].push_back(id);
    }
  }
}

std::optional<int> DirectedGraph::edge_between(VertexId u, VertexId v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return std::nullopt;
  const auto& nb = nbr_[u];
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return inc_[u][it - nb.begin()];
}

std::optional<int> DirectedGraph::edge_id(VertexId tail, VertexId head) const {
  auto id = edge_between(tail, head);
  if (id && edges_[*id].tail == tail) return id;
  return std::nullopt;
}

std::string DirectedGraph::vertex_label(VertexId v) const {
  if (!names_.empty()) return names_[v];
  return std::to_string(v);
}

Subgraph induced_subgraph(const DirectedGraph& g,
                          std::span<const VertexId> vertices) {
  std::vector<int> local(g.num_vertices(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    local[vertices[i]] = i;
  }
  Subgraph sub;
  sub.to_parent.assign(vertices.begin(), vertices.end());
  std::vector<Edge> edges;
  std::vector<int> parent_ids;
  for (int id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    if (local[e.tail] >= 0 && local[e.head] >= 0) {
      edges.push_back({local[e.tail], local[e.head]});
    }
  }
  std::vector<std::string> names;
  if (!g.names().empty()) {
    for (VertexId v : vertices) names.push_back(g.names()[v]);
  }
  sub.graph = DirectedGraph(static_cast<int>(vertices.size()), std::move(edges),
                            std::move(names));
  for (const Edge& e : sub.graph.edges()) {
    sub.edge_to_parent.push_back(
        *g.edge_id(sub.to_parent[e.tail], sub.to_parent[e.head]));
  }
  return sub;
}

Subgraph edge_subgraph(const DirectedGraph& g, std::span<const int> edge_ids) {
  std::vector<VertexId> vertices;
  for (int id : edge_ids) {
    vertices.push_back(g.edge(id).tail);
    vertices.push_back(g.edge(id).head);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<int> local(g.num_vertices(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    local[vertices[i]] = i;
  }
  std::vector<Edge> edges;
  for (int id : edge_ids) {
    edges.push_back({local[g.edge(id).tail], local[g.edge(id).head]});
  }
  std::vector<std::string> names;
  if (!g.names().empty()) {
    for (VertexId v : vertices) names.push_back(g.names()[v]);
  }
  Subgraph sub;
  sub.to_parent = vertices;
  sub.graph = DirectedGraph(static_cast<int>(vertices.size()), std::move(edges),
                            std::move(names));
  for (const Edge& e : sub.graph.edges()) {
    sub.edge_to_parent.push_back(
        *g.edge_id(sub.to_parent[e.tail], sub.to_parent[e.head]));
  }
  return sub;
}

DirectedGraph with_added_edges(const DirectedGraph& g,
                               std::span<const Edge> extra) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const Edge& e : edges) seen.insert(std::minmax(e.tail, e.head));
  for (const Edge& e : extra) {
    if (seen.insert(std::minmax(e.tail, e.head)).second) edges.push_back(e);
  }
  return DirectedGraph(g.num_vertices(), std::move(edges), g.names());
}

std::vector<VertexId> topological_order(const DirectedGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> indeg(n);
  for (VertexId v = 0; v < n; ++v) indeg[v] = g.in_neighbors(v).size();
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push(v);
  }
  std::vector<VertexId> order;
  order.reserve(n);
  while (!ready.empty()) {
    VertexId v = ready.top();
    ready.pop();
    order.push_back(v);
    for (VertexId w : g.out_neighbors(v)) {
      if (--indeg[w] == 0) ready.push(w);
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw Error(ErrorCode::kCyclicGraph, "graph has a directed cycle");
  }
  return order;
}

bool is_acyclic(const DirectedGraph& g) {
  try {
    topological_order(g);
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool is_topological(const DirectedGraph& g,
                    std::span<const VertexId> ordering) {
  const int n = g.num_vertices();
  if (static_cast<int>(ordering.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    VertexId v = ordering[i];
    if (v < 0 || v >= n || pos[v] >= 0) return false;
    pos[v] = i;
  }
  for (const Edge& e : g.edges()) {
    if (pos[e.tail] > pos[e.head]) return false;
  }
  return true;
}

namespace {

struct TopoEnumerator {
  const DirectedGraph& g;
  const std::function<bool(std::span<const VertexId>)>& visit;
  std::vector<int> indeg;
  std::vector<char> placed;
  std::vector<VertexId> prefix;

  // Returns false once the visitor asked to stop.
  bool run() {
    const int n = g.num_vertices();
    if (static_cast<int>(prefix.size()) == n) return visit(prefix);
    for (VertexId v = 0; v < n; ++v) {
      if (placed[v] || indeg[v] != 0) continue;
      placed[v] = 1;
      prefix.push_back(v);
      for (VertexId w : g.out_neighbors(v)) --indeg[w];
      bool keep_going = run();
      for (VertexId w : g.out_neighbors(v)) ++indeg[w];
      prefix.pop_back();
      placed[v] = 0;
      if (!keep_going) return false;
    }
    return true;
  }
};

}  // namespace

void for_each_topological_ordering(
    const DirectedGraph& g,
    const std::function<bool(std::span<const VertexId>)>& visit) {
  if (!is_acyclic(g)) {
    throw Error(ErrorCode::kCyclicGraph, "graph has a directed cycle");
  }
  TopoEnumerator en{g, visit, {}, {}, {}};
  en.indeg.resize(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    en.indeg[v] = g.in_neighbors(v).size();
  }
  en.placed.assign(g.num_vertices(), 0);
  en.run();
}

std::vector<std::vector<VertexId>> enumerate_topological_orderings(
    const DirectedGraph& g, std::int64_t limit) {
  std::vector<std::vector<VertexId>> out;
  if (limit <= 0) {
    if (!is_acyclic(g)) {
      throw Error(ErrorCode::kCyclicGraph, "graph has a directed cycle");
    }
    return out;
  }
  for_each_topological_ordering(g, [&](std::span<const VertexId> order) {
    out.emplace_back(order.begin(), order.end());
    return static_cast<std::int64_t>(out.size()) < limit;
  });
  return out;
}

std::vector<std::vector<VertexId>> connected_components(
    const DirectedGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<VertexId>> comps;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int c = comps.size();
    comps.emplace_back();
    std::vector<VertexId> stack = {s};
    comp[s] = c;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      comps[c].push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = c;
          stack.push_back(w);
        }
      }
    }
    std::sort(comps[c].begin(), comps[c].end());
  }
  return comps;
}

bool is_connected(const DirectedGraph& g) {
  return connected_components(g).size() <= 1;
}

}  // namespace dagstack
