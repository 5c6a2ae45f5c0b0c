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

#ifndef DAGSTACK_GRAPH_H_
#define DAGSTACK_GRAPH_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dagstack {

// Vertices of a graph are the dense ids 0..n-1.
using VertexId = int;

struct Edge {
  VertexId tail = 0;
  VertexId head = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A simple directed graph: no loops, and at most one edge between any
// unordered pair of vertices. Edges are kept sorted by (tail, head), so an
// edge id is its rank in that order. Immutable once constructed.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  explicit DirectedGraph(int n) : DirectedGraph(n, {}) {}
  // Throws Error(kInvariantViolation) on loops, parallel or antiparallel
  // edges, out-of-range endpoints, or a names list of the wrong length.
  DirectedGraph(int n, std::vector<Edge> edges,
                std::vector<std::string> names = {});

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[id]; }

  // Id of the edge tail->head, if present (direction matters).
  std::optional<int> edge_id(VertexId tail, VertexId head) const;
  // Id of the edge between u and v in either direction.
  std::optional<int> edge_between(VertexId u, VertexId v) const;
  bool has_edge(VertexId tail, VertexId head) const {
    return edge_id(tail, head).has_value();
  }
  bool adjacent(VertexId u, VertexId v) const {
    return edge_between(u, v).has_value();
  }

  std::span<const VertexId> out_neighbors(VertexId v) const { return out_[v]; }
  std::span<const VertexId> in_neighbors(VertexId v) const { return in_[v]; }
  // Undirected neighbourhood, sorted by id.
  std::span<const VertexId> neighbors(VertexId v) const { return nbr_[v]; }
  // Ids of the edges incident to v, parallel to neighbors(v).
  std::span<const int> incident_edges(VertexId v) const { return inc_[v]; }
  int degree(VertexId v) const { return static_cast<int>(nbr_[v].size()); }

  const std::vector<std::string>& names() const { return names_; }
  std::string vertex_label(VertexId v) const;

  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> names_;
  std::vector<std::vector<VertexId>> out_, in_, nbr_;
  std::vector<std::vector<int>> inc_;
};

// A subgraph together with the maps back into its parent graph.
struct Subgraph {
  DirectedGraph graph;
  std::vector<VertexId> to_parent;   // local vertex -> parent vertex
  std::vector<int> edge_to_parent;   // local edge id -> parent edge id
};

// Induced on `vertices`; local ids follow the order of `vertices`.
Subgraph induced_subgraph(const DirectedGraph& g,
                          std::span<const VertexId> vertices);
// Spanned by `edge_ids`; local vertex ids follow increasing parent id.
Subgraph edge_subgraph(const DirectedGraph& g, std::span<const int> edge_ids);

// Same vertex set, every edge of g plus `extra` (deduplicated).
DirectedGraph with_added_edges(const DirectedGraph& g,
                               std::span<const Edge> extra);

bool is_acyclic(const DirectedGraph& g);

// Lexicographically smallest topological ordering. Throws kCyclicGraph.
std::vector<VertexId> topological_order(const DirectedGraph& g);

bool is_topological(const DirectedGraph& g, std::span<const VertexId> ordering);

// Calls `visit` with every topological ordering in lexicographic order of
// vertex ids until it returns false. Throws kCyclicGraph.
void for_each_topological_ordering(
    const DirectedGraph& g,
    const std::function<bool(std::span<const VertexId>)>& visit);

// First `limit` topological orderings in lexicographic order.
std::vector<std::vector<VertexId>> enumerate_topological_orderings(
    const DirectedGraph& g, std::int64_t limit);

// Components of the underlying undirected graph, each sorted, ordered by
// smallest member.
std::vector<std::vector<VertexId>> connected_components(const DirectedGraph& g);
bool is_connected(const DirectedGraph& g);

}  // namespace dagstack

#endif  // DAGSTACK_GRAPH_H_
