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

#ifndef DAGSTACK_LAYOUT_H_
#define DAGSTACK_LAYOUT_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dagstack/graph.h"

namespace dagstack {

// A vertex ordering plus a stack id for every edge (indexed by edge id).
struct Layout {
  DirectedGraph graph;
  std::vector<VertexId> ordering;
  std::vector<int> stack_of_edge;
  int num_stacks = 0;

  std::vector<int> positions() const;
};

// Position of each vertex in `ordering`; throws kBadOrdering unless the
// ordering is a permutation of 0..n-1.
std::vector<int> positions_of(std::span<const VertexId> ordering, int n);

// Adjacency lists over edge ids: e and f are adjacent iff they cross.
struct CrossingGraph {
  std::vector<std::vector<int>> adjacency;

  int num_nodes() const { return static_cast<int>(adjacency.size()); }
  int num_crossings() const;
  bool crosses(int e, int f) const;
};

bool edges_cross(const Edge& e, const Edge& f, std::span<const int> pos);
// True iff e strictly encloses f or f strictly encloses e.
bool edges_nest(const Edge& e, const Edge& f, std::span<const int> pos);

CrossingGraph crossing_graph(const DirectedGraph& g,
                             std::span<const VertexId> ordering);

struct EdgeSetResult {
  int size = 0;
  std::vector<int> edges;  // edge ids of one witness
};

// Largest set of pairwise crossing edges.
EdgeSetResult twist_of_ordering(const DirectedGraph& g,
                                std::span<const VertexId> ordering);
// Largest set of pairwise nesting edges.
EdgeSetResult rainbow_of_ordering(const DirectedGraph& g,
                                  std::span<const VertexId> ordering);

// Maximum clique of an arbitrary crossing graph by branch and bound.
EdgeSetResult max_clique(const CrossingGraph& cg);

// First-fit in (left, right) endpoint order. Throws kNotTopological.
Layout greedy_stack_assignment(const DirectedGraph& g,
                               std::span<const VertexId> ordering);

struct ExactColoring {
  int num_stacks = 0;
  std::vector<int> stack_of_edge;
};

// Minimum number of stacks for a fixed ordering. Throws kTooLarge when the
// graph has more than `edge_limit` edges, kNotTopological.
ExactColoring exact_min_stacks_for_ordering(const DirectedGraph& g,
                                            std::span<const VertexId> ordering,
                                            int edge_limit = 24);

// Exact chromatic number of a crossing graph, seeded with an upper bound.
ExactColoring exact_coloring(const CrossingGraph& cg);

enum class ViolationKind { kNone, kBadOrdering, kNotTopological,
                           kUnassigned, kCrossing };

struct LayoutCheck {
  ViolationKind kind = ViolationKind::kNone;
  std::vector<int> edges;  // offending edge ids
  std::string message;

  bool ok() const { return kind == ViolationKind::kNone; }
};

LayoutCheck verify_layout(const Layout& l);

// Renumbers stacks densely in order of first use, scanning edges in
// (left position, right position) order. Updates num_stacks.
void compact_stacks(Layout& l);

// Layout of the same ordering restricted to a subgraph given by parent edge
// ids; stacks are compacted.
Layout restrict_layout(const Layout& l, const DirectedGraph& sub,
                       std::span<const int> edge_to_parent,
                       std::span<const VertexId> to_parent);

// Ceiling of 2k log k + 2k log log k + 10k (base 2); 1 for k = 1.
// Throws kNonPositive for k < 1.
long long davies_bound(long long k);

}  // namespace dagstack

#endif  // DAGSTACK_LAYOUT_H_
