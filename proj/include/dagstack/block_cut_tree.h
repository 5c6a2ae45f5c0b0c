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

#ifndef DAGSTACK_BLOCK_CUT_TREE_H_
#define DAGSTACK_BLOCK_CUT_TREE_H_

#include <optional>
#include <vector>

#include "dagstack/graph.h"

namespace dagstack {

// Blocks (bridges and maximal 2-connected components) of the underlying
// undirected graph, the cut vertices, and the bipartite tree joining them,
// rooted at `root`.
//
// Blocks are indexed in increasing lexicographic order of their sorted vertex
// lists. The rooted view answers "which cut vertex hangs this block below its
// parent" and "which blocks hang below this cut vertex".
struct BlockCutTree {
  std::vector<std::vector<int>> blocks;              // edge ids, sorted
  std::vector<std::vector<VertexId>> block_vertices; // sorted
  std::vector<VertexId> cut_vertices;                // sorted
  std::vector<std::pair<int, VertexId>> tree_edges;  // (block, cut vertex)
  int root = -1;

  std::vector<int> block_of_edge;
  std::vector<VertexId> parent_cut;       // per block, -1 at the root
  std::vector<int> parent_block;          // per vertex, -1 unless cut vertex
  std::vector<std::vector<int>> child_blocks;  // per vertex
  std::vector<int> level;                 // per block: cut vertices to root
  std::vector<int> top_down;              // blocks, parents before children
  // Per vertex: the block closest to the root that contains it (-1 for
  // isolated vertices).
  std::vector<int> home_block;

  int num_blocks() const { return static_cast<int>(blocks.size()); }
  bool is_cut_vertex(VertexId v) const { return parent_block[v] >= 0; }
};

// Throws kDisconnected when the underlying graph has more than one
// component. `root_edge` selects the root as the block containing that edge;
// otherwise the root is the first block containing the lowest-id vertex.
BlockCutTree block_cut_tree(const DirectedGraph& g,
                            std::optional<int> root_edge = std::nullopt);

}  // namespace dagstack

#endif  // DAGSTACK_BLOCK_CUT_TREE_H_
