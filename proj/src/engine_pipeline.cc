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

#include <algorithm>
#include <string>

#include "dagstack/engine.h"
#include "dagstack/error.h"
#include "dagstack/outerplanar.h"

namespace dagstack {

namespace {

// Every subtree occupies an interval with in-neighbour subtrees left of its
// root and out-neighbour subtrees right of it, so no edge passes over a root
// and a single stack suffices.
std::vector<VertexId> tree_ordering(const DirectedGraph& c) {
  struct Task {
    VertexId v;
    VertexId parent;
    bool expand;
  };
  std::vector<VertexId> order;
  std::vector<Task> todo{{0, -1, true}};
  while (!todo.empty()) {
    const Task task = todo.back();
    todo.pop_back();
    if (!task.expand) {
      order.push_back(task.v);
      continue;
    }
    const auto outs = c.out_neighbors(task.v);
    for (auto it = outs.rbegin(); it != outs.rend(); ++it) {
      if (*it != task.parent) todo.push_back({*it, task.v, true});
    }
    todo.push_back({task.v, task.parent, false});
    const auto ins = c.in_neighbors(task.v);
    for (auto it = ins.rbegin(); it != ins.rend(); ++it) {
      if (*it != task.parent) todo.push_back({*it, task.v, true});
    }
  }
  return order;
}

PipelineResult layout_component(const DirectedGraph& c,
                                const PipelineConfig& config) {
  PipelineResult r;
  const int n = c.num_vertices();
  if (c.num_edges() == n - 1) {
    r.layout = greedy_stack_assignment(c, tree_ordering(c));
    r.report.h = r.layout.num_stacks;
    r.report.f = r.report.w = r.layout.num_stacks;
    r.report.stacks = r.layout.num_stacks;
    return r;
  }
  const DirectedGraph a = augment_to_maximal_outerplanar(c);
  Edge base = a.edge(0);
  if (config.base_edge && a.has_edge(config.base_edge->tail,
                                     config.base_edge->head)) {
    base = *config.base_edge;
  }
  const ConstructionSequence seq = build_construction_sequence(a, base);
  const ConstructionTree t = build_construction_tree(seq, a);
  const DirectedHPartition hp = construct_directed_h_partition(a, seq, t);

  std::vector<Layout> part_layouts;
  for (int p = 0; p < hp.num_parts(); ++p) {
    part_layouts.push_back(layout_transitive_part(a, t, hp.apex[p]));
    r.report.s = std::max(r.report.s, part_layouts.back().num_stacks);
  }

  const DirectedGraph& h = hp.quotient;
  const int root_edge = *h.edge_id(hp.part_of[base.tail],
                                   hp.part_of[base.head]);
  const BlockCutTree bct = block_cut_tree(h, root_edge);
  std::vector<ExpandingLayout> expanders;
  for (int b = 0; b < bct.num_blocks(); ++b) {
    const auto& qv = bct.block_vertices[b];
    BlockPartition bp = restrict_to_block(a, hp, qv);
    const int creation = hp.block_of_quotient_edge[bct.blocks[b].front()];
    const Edge hb = hp.block_base[creation];
    auto local = [&](VertexId q) {
      return static_cast<VertexId>(
          std::lower_bound(qv.begin(), qv.end(), q) - qv.begin());
    };
    BlockLayoutResult hl = layout_monotone_block(
        bp.partition.quotient, {local(hb.tail), local(hb.head)}, config.block);
    r.report.h = std::max(r.report.h, hl.layout.num_stacks);
    std::vector<Layout> pls;
    for (VertexId q : qv) pls.push_back(part_layouts[q]);
    ExpandingLayout x = expand_partition_layout(
        bp.graph.graph, bp.partition, hl.layout, pls,
        bp.partition.certificates);
    r.report.f = std::max(r.report.f, x.forests);
    r.report.w = std::max(r.report.w, x.cover_width);
    expanders.push_back(std::move(x));
  }
  ComposeStats stats;
  Layout full = compose_blockwise(a, hp, bct, expanders, r.report.p,
                                  r.report.t, &stats);
  std::vector<int> edge_map;
  std::vector<VertexId> identity(n);
  for (VertexId v = 0; v < n; ++v) identity[v] = v;
  for (const Edge& e : c.edges()) edge_map.push_back(*a.edge_id(e.tail, e.head));
  r.layout = restrict_layout(full, c, edge_map, identity);
  r.report.stacks = r.layout.num_stacks;
  return r;
}

}  // namespace

PipelineResult layout_outerplanar_dag(const DirectedGraph& g,
                                      const PipelineConfig& config) {
  if (!is_acyclic(g)) {
    throw Error(ErrorCode::kCyclicGraph, "graph has a directed cycle");
  }
  if (!is_outerplanar(g).outerplanar) {
    throw Error(ErrorCode::kNotOuterplanar, "graph is not outerplanar");
  }
  PipelineResult r;
  r.layout.graph = g;
  r.layout.stack_of_edge.assign(g.num_edges(), -1);
  for (const auto& comp : connected_components(g)) {
    Subgraph sub = induced_subgraph(g, comp);
    PipelineResult cr = layout_component(sub.graph, config);
    for (VertexId v : cr.layout.ordering) {
      r.layout.ordering.push_back(sub.to_parent[v]);
    }
    for (int id = 0; id < sub.graph.num_edges(); ++id) {
      r.layout.stack_of_edge[sub.edge_to_parent[id]] =
          cr.layout.stack_of_edge[id];
    }
    r.layout.num_stacks = std::max(r.layout.num_stacks, cr.layout.num_stacks);
    BoundReport& b = r.report;
    b.h = std::max(b.h, cr.report.h);
    b.f = std::max(b.f, cr.report.f);
    b.w = std::max(b.w, cr.report.w);
    b.s = std::max(b.s, cr.report.s);
  }
  if (g.num_edges() > 0) compact_stacks(r.layout);
  BoundReport& b = r.report;
  b.stacks = r.layout.num_stacks;
  b.bound = 4LL * b.p * b.t * (static_cast<long long>(b.f) * b.w * b.h + b.s);
  return r;
}

}  // namespace dagstack
