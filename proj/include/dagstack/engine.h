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

#ifndef DAGSTACK_ENGINE_H_
#define DAGSTACK_ENGINE_H_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dagstack/block_cut_tree.h"
#include "dagstack/graph.h"
#include "dagstack/hpartition.h"
#include "dagstack/layout.h"
#include "dagstack/twotree.h"

namespace dagstack {

// 1-stack layout of the transitive subgraph below the monotone vertex w.
// Vertex i of the returned layout's graph is the i-th smallest vertex of
// transitive_subgraph_below(t, w). Throws kNotMonotoneVertex.
Layout layout_transitive_part(const DirectedGraph& g, const ConstructionTree& t,
                              VertexId w);

enum class BlockStrategy { kExactSmall, kHeuristic };

struct BlockLayoutOptions {
  BlockStrategy strategy = BlockStrategy::kExactSmall;
  int exact_threshold = 12;           // max vertices for kExactSmall
  long long exact_max_orderings = 200'000;
};

struct BlockLayoutResult {
  Layout layout;
  int twist = 0;
  BlockStrategy used = BlockStrategy::kHeuristic;
};

// Throws kNotMonotone if some stacking relative to base_edge is not
// monotone (or the block is not a 2-tree).
BlockLayoutResult layout_monotone_block(const DirectedGraph& b, Edge base_edge,
                                        const BlockLayoutOptions& options = {});

// Glues per-block layouts along the block-cut tree; the result uses at most
// 2s + 2 stacks when every block uses s. per_block[i] lays out
// edge_subgraph(g, bct.blocks[i]). Throws kMissingBlockLayout.
Layout combine_block_layouts(const DirectedGraph& g, const BlockCutTree& bct,
                             const std::vector<std::optional<Layout>>& per_block);

struct StarForestDecomposition {
  std::vector<std::vector<int>> forests;  // indices into the input edges
  // center[i] is the centre of the star containing input edge i.
  std::vector<VertexId> center;
  std::vector<int> forest_of;

  int num_forests() const { return static_cast<int>(forests.size()); }
};

// At most four star forests; exactly minimal for up to 16 edges when three
// or fewer suffice. Throws kNotOuterplanar.
StarForestDecomposition star_forest_decomposition(std::span<const Edge> edges);

struct ExpandingLayout {
  Layout layout;
  std::vector<VertexId> host_ordering;
  std::vector<std::pair<int, int>> part_spans;  // [begin, end) per part
  int forests = 0;                              // f of the run
  int cover_width = 0;                          // w of the run
  int part_stacks = 0;                          // s of the run
};

// Expands a layout of hp.quotient into one of g. part_layouts[i] lays out
// induced_subgraph(g, hp.parts[i]); cover[i] is the certificate used for
// part i. Inter-part edges use stacks s + (H-stack * f + forest) * w + j.
// Throws kCertificateInsufficient, kSpanConflict.
ExpandingLayout expand_partition_layout(
    const DirectedGraph& g, const DirectedHPartition& hp,
    const Layout& h_layout, const std::vector<Layout>& part_layouts,
    const std::vector<CutCoverCertificate>& cover);

// A block of the quotient together with the induced sub-partition.
struct BlockPartition {
  std::vector<VertexId> quotient_vertices;  // sorted
  Subgraph graph;                           // G[B]
  DirectedHPartition partition;             // of graph.graph
};

BlockPartition restrict_to_block(const DirectedGraph& g,
                                 const DirectedHPartition& hp,
                                 std::span<const VertexId> quotient_vertices);

struct ComposeStats {
  int block_stacks = 0;  // s of the composition
  int p = 2;
  int t = 1;
};

// Combines the per-block expanding layouts of H into a layout of g. bct is
// rooted; expanders[i] is the expanding layout of
// restrict_to_block(g, hp, bct.block_vertices[i]).
// Throws kPremiseViolated.
Layout compose_blockwise(const DirectedGraph& g, const DirectedHPartition& hp,
                         const BlockCutTree& bct,
                         const std::vector<ExpandingLayout>& expanders,
                         int p = 2, int t = 1, ComposeStats* stats = nullptr);

struct PipelineConfig {
  std::optional<Edge> base_edge;  // of the augmented graph
  BlockLayoutOptions block;
};

struct BoundReport {
  int h = 0, f = 0, w = 0, s = 0, p = 2, t = 1;
  int stacks = 0;
  long long bound = 0;  // 4 * p * t * (f * w * h + s)
  long long paper_ceiling = 24776;
};

struct PipelineResult {
  Layout layout;
  BoundReport report;
};

// Throws kNotOuterplanar, kCyclicGraph.
PipelineResult layout_outerplanar_dag(const DirectedGraph& g,
                                      const PipelineConfig& config = {});

}  // namespace dagstack

#endif  // DAGSTACK_ENGINE_H_
