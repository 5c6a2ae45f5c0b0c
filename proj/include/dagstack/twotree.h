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

#ifndef DAGSTACK_TWOTREE_H_
#define DAGSTACK_TWOTREE_H_

#include <optional>
#include <vector>

#include "dagstack/graph.h"

namespace dagstack {

// How a vertex u sits on its directed parent edge v->w.
enum class StackingType {
  kCyclic,         // w->u, u->v
  kTransitive,     // v->u, u->w
  kMonotoneLeft,   // u->v, u->w
  kMonotoneRight,  // v->u, w->u
};

const char* stacking_type_name(StackingType type);

inline bool is_monotone(StackingType type) {
  return type == StackingType::kMonotoneLeft ||
         type == StackingType::kMonotoneRight;
}

struct StackingStep {
  VertexId child = 0;
  Edge parent_edge;  // as oriented in the graph
  StackingType type = StackingType::kTransitive;
};

struct ConstructionSequence {
  Edge base;
  std::vector<StackingStep> steps;

  // Vertices in construction order: base tail, base head, then the steps.
  std::vector<VertexId> vertex_order() const;
};

// Recognises the underlying 2-tree by peeling degree-2 vertices with adjacent
// neighbours (lowest id first, never a base endpoint) and returns the
// construction sequence rooted at `base`. Steps are emitted smallest id
// first among the vertices whose parents are already present.
// Throws kEdgeMissing if base is not a directed edge of g, kNotTwoTree.
ConstructionSequence build_construction_sequence(const DirectedGraph& g,
                                                 Edge base);

// Rebuilds the directed graph by replaying the sequence on n vertices.
DirectedGraph replay(const ConstructionSequence& seq, int n);

// Number of vertices stacked onto each edge (indexed by edge id of g).
std::vector<int> stacked_counts(const ConstructionSequence& seq,
                                const DirectedGraph& g);

// A 2-tree is maximal outerplanar iff at most one vertex is stacked onto each
// non-base edge and at most two onto the base edge.
bool is_maximal_outerplanar_sequence(const ConstructionSequence& seq,
                                     const DirectedGraph& g);

// Throws kEdgeMissing if either child edge is absent.
StackingType classify_stacking(Edge parent_edge, VertexId child,
                               const DirectedGraph& g);

enum class Label { kM, kT };

// Rooted construction tree of a maximal outerplanar DAG: the base tail is
// the root, the base head its only child, and every other vertex hangs below
// the younger endpoint of its parent edge.
struct ConstructionTree {
  VertexId root = 0;
  std::vector<VertexId> parent;               // -1 at the root
  std::vector<std::vector<VertexId>> children;
  std::vector<Label> label;
  std::vector<StackingType> type;             // meaningless for base ends
  std::vector<Edge> parent_edge;              // meaningless for base ends
  std::vector<int> position;                  // index in vertex_order()
  Edge base;

  bool is_base_vertex(VertexId v) const {
    return v == base.tail || v == base.head;
  }
};

// Throws kCyclicStackingFound.
ConstructionTree build_construction_tree(const ConstructionSequence& seq,
                                         const DirectedGraph& g);

// v together with its descendants reachable through T-labelled vertices only.
// Sorted by id.
std::vector<VertexId> transitive_subgraph_below(const ConstructionTree& t,
                                                VertexId v);

struct BlockMonotonicity {
  std::vector<VertexId> vertices;  // ids in the input graph
  bool monotone = false;
  std::optional<Edge> monotone_base;
  bool transitive = false;
  std::optional<Edge> transitive_base;
};

struct MonotonicityReport {
  std::vector<BlockMonotonicity> blocks;
  bool block_monotone = false;
};

// Tries every edge of every block as the base edge. Throws
// kNotTwoTreeBlock if a block is not a 2-tree, kCyclicGraph.
MonotonicityReport monotonicity_profile(const DirectedGraph& g);

}  // namespace dagstack

#endif  // DAGSTACK_TWOTREE_H_
