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

#ifndef DAGSTACK_HPARTITION_H_
#define DAGSTACK_HPARTITION_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dagstack/block_cut_tree.h"
#include "dagstack/graph.h"
#include "dagstack/twotree.h"

namespace dagstack {

struct CutCoverCertificate {
  int part = -1;
  std::vector<VertexId> cover;  // sorted, distinct
  // Quotient vertices of the block the certificate is valid for; empty means
  // the whole graph.
  std::vector<VertexId> scope;
};

// A partition of V(G) whose parts are indexed by increasing apex id. Quotient
// vertex i is part i.
struct DirectedHPartition {
  std::vector<std::vector<VertexId>> parts;  // each sorted
  DirectedGraph quotient;
  std::vector<int> part_of;
  std::vector<VertexId> apex;
  // Directed paths inside each part (tail to head order), and the longer
  // paths Q1+, Q2+ they were cut from. Empty for the root part.
  std::vector<std::vector<VertexId>> q1, q2;
  std::vector<std::vector<VertexId>> q1_plus, q2_plus;
  // Parents v, w of each apex in the graph (both x for y, -1 for x).
  std::vector<VertexId> apex_parent_v, apex_parent_w;
  // For every quotient edge: index of the block of H it was created in.
  std::vector<int> block_of_quotient_edge;
  // Per creation block: its base quotient edge, the graph edge the first
  // apex of the block was stacked on (both endpoints -1 for the root
  // block), and the part that edge lies in (-1 for the root block).
  std::vector<Edge> block_base;
  std::vector<Edge> block_init_edge;
  std::vector<int> block_source_part;
  // Constructive certificates, one per (block, part in block).
  std::vector<CutCoverCertificate> certificates;

  int num_parts() const { return static_cast<int>(parts.size()); }
  int root_part() const;
};

// Contracts every part to a vertex. Throws kNotAPartition, kMixedDirections.
DirectedGraph quotient_graph(const DirectedGraph& g,
                             const std::vector<std::vector<VertexId>>& parts);

struct CutCoverResult {
  int size = 0;
  std::vector<VertexId> cover;
};

// Minimum number of vertices covering every edge with exactly one endpoint in
// `part` (and, with a scope, the other endpoint inside the scope). Throws
// kCapExceeded when more than `size_cap` vertices are needed and
// kPreconditionViolated for caps outside [0, 6].
CutCoverResult cut_cover_number(
    const DirectedGraph& g, std::span<const VertexId> part,
    std::optional<std::span<const VertexId>> scope, int size_cap = 6);

// Apexes that are left children get the mirror image of the right-child
// treatment: the roles of the two parent paths are swapped. Throws
// kNotMaximalOuterplanar, kCyclicStackingFound.
DirectedHPartition construct_directed_h_partition(
    const DirectedGraph& g, const ConstructionSequence& seq,
    const ConstructionTree& t);

// The sequence with each monotone vertex followed by the transitive
// subgraph below it, otherwise in the original order.
ConstructionSequence reorder_for_partition(const ConstructionSequence& seq,
                                           const ConstructionTree& t);

// Graph vertices of the parts whose quotient vertices are listed.
std::vector<VertexId> expand_parts(const DirectedHPartition& hp,
                                   std::span<const VertexId> quotient_vertices);

struct PartitionReport {
  bool precheck = false;  // partition valid and edge classes one-directional
  bool p1 = false, p2 = false, p3 = false, p4 = false;
  int max_cut_cover = 0;
  std::vector<std::string> failures;

  bool ok() const { return precheck && p1 && p2 && p3 && p4; }
};

// Re-derives every property from g, the tree and the partition alone. For
// graphs with at most `cross_check_limit` vertices each certificate is also
// compared against the exact cut cover number.
PartitionReport verify_partition_properties(const DirectedGraph& g,
                                            const DirectedHPartition& hp,
                                            const ConstructionTree& t,
                                            int cross_check_limit = 60);

}  // namespace dagstack

#endif  // DAGSTACK_HPARTITION_H_
