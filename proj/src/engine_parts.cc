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
#include <list>
#include <string>

#include "dagstack/engine.h"
#include "dagstack/error.h"
#include "dagstack/oracle.h"

namespace dagstack {

Layout layout_transitive_part(const DirectedGraph& g, const ConstructionTree& t,
                              VertexId w) {
  if (w < 0 || w >= g.num_vertices() || t.label[w] != Label::kM) {
    throw Error(ErrorCode::kNotMonotoneVertex,
                "vertex " + std::to_string(w) + " is not labelled M");
  }
  const std::vector<VertexId> part = transitive_subgraph_below(t, w);
  const bool left =
      !t.is_base_vertex(w) && t.type[w] == StackingType::kMonotoneLeft;

  std::vector<VertexId> body;
  for (VertexId c : t.children[w]) {
    if (t.label[c] != Label::kT) continue;
    const Edge& pe = t.parent_edge[c];
    const VertexId other = pe.tail == w ? pe.head : pe.tail;
    std::vector<VertexId> below = transitive_subgraph_below(t, c);
    std::vector<VertexId> fan = below;
    fan.push_back(w);
    fan.push_back(other);
    std::sort(fan.begin(), fan.end());
    Subgraph fs = induced_subgraph(g, fan);
    for (VertexId local : topological_order(fs.graph)) {
      VertexId v = fs.to_parent[local];
      if (std::binary_search(below.begin(), below.end(), v)) body.push_back(v);
    }
  }
  std::vector<VertexId> order;
  if (left) order.push_back(w);
  order.insert(order.end(), body.begin(), body.end());
  if (!left) order.push_back(w);

  Subgraph sub = induced_subgraph(g, part);
  Layout l;
  l.graph = sub.graph;
  for (VertexId v : order) {
    l.ordering.push_back(static_cast<VertexId>(
        std::lower_bound(part.begin(), part.end(), v) - part.begin()));
  }
  l.stack_of_edge.assign(l.graph.num_edges(), 0);
  l.num_stacks = l.graph.num_edges() > 0 ? 1 : 0;
  LayoutCheck check = verify_layout(l);
  if (!check.ok()) {
    throw Error(ErrorCode::kInternal,
                "transitive part of " + std::to_string(w) +
                    " is not 1-stack: " + check.message);
  }
  return l;
}

namespace {

// Insertion ordering of the vertices in `steps` around the base edge: a
// right child goes next to its later parent, a left child next to its
// earlier parent, or to the far end when `tight` is false.
std::vector<VertexId> insertion_order(const ConstructionSequence& seq,
                                      const std::vector<StackingStep>& steps,
                                      int n, bool tight) {
  std::list<VertexId> order = {seq.base.tail, seq.base.head};
  std::vector<std::list<VertexId>::iterator> where(n);
  where[seq.base.tail] = order.begin();
  where[seq.base.head] = std::next(order.begin());
  for (const StackingStep& s : steps) {
    auto a = where[s.parent_edge.tail], b = where[s.parent_edge.head];
    // Which parent comes first in the current list.
    bool a_first = true;
    for (auto it = order.begin(); it != order.end(); ++it) {
      if (it == a) break;
      if (it == b) {
        a_first = false;
        break;
      }
    }
    auto first = a_first ? a : b, last = a_first ? b : a;
    if (s.type == StackingType::kMonotoneRight) {
      where[s.child] =
          order.insert(tight ? std::next(last) : order.end(), s.child);
    } else {
      where[s.child] = order.insert(tight ? first : order.begin(), s.child);
    }
  }
  return {order.begin(), order.end()};
}

std::vector<VertexId> split_and_merge(const ConstructionSequence& seq, int n,
                                      bool tight) {
  const VertexId x = seq.base.tail, y = seq.base.head;
  std::vector<int> half(n, -1);
  std::vector<std::vector<StackingStep>> halves;
  for (const StackingStep& s : seq.steps) {
    const Edge& e = s.parent_edge;
    int h;
    if ((e.tail == x && e.head == y) || (e.tail == y && e.head == x)) {
      h = static_cast<int>(halves.size());
      halves.emplace_back();
    } else {
      h = half[e.tail] >= 0 ? half[e.tail] : half[e.head];
    }
    half[s.child] = h;
    halves[h].push_back(s);
  }
  std::vector<VertexId> before, between, after;
  for (const auto& steps : halves) {
    std::vector<VertexId> o = insertion_order(seq, steps, n, tight);
    auto px = std::find(o.begin(), o.end(), x) - o.begin();
    auto py = std::find(o.begin(), o.end(), y) - o.begin();
    before.insert(before.end(), o.begin(), o.begin() + px);
    between.insert(between.end(), o.begin() + px + 1, o.begin() + py);
    after.insert(after.end(), o.begin() + py + 1, o.end());
  }
  std::vector<VertexId> out = before;
  out.push_back(x);
  out.insert(out.end(), between.begin(), between.end());
  out.push_back(y);
  out.insert(out.end(), after.begin(), after.end());
  return out;
}

BlockLayoutResult finish(const DirectedGraph& b, std::vector<VertexId> order,
                         BlockStrategy used, bool exact_colouring) {
  BlockLayoutResult r;
  r.used = used;
  if (exact_colouring && b.num_edges() <= 40) {
    ExactColoring c = exact_coloring(crossing_graph(b, order));
    r.layout.graph = b;
    r.layout.ordering = order;
    r.layout.stack_of_edge = c.stack_of_edge;
    r.layout.num_stacks = c.num_stacks;
    if (b.num_edges() > 0) compact_stacks(r.layout);
  } else {
    r.layout = greedy_stack_assignment(b, order);
  }
  r.twist = twist_of_ordering(b, order).size;
  return r;
}

}  // namespace

BlockLayoutResult layout_monotone_block(const DirectedGraph& b, Edge base_edge,
                                        const BlockLayoutOptions& options) {
  const int n = b.num_vertices();
  if (n <= 2) {
    if (!is_acyclic(b)) {
      throw Error(ErrorCode::kNotMonotone, "block is cyclic");
    }
    return finish(b, topological_order(b), BlockStrategy::kHeuristic, false);
  }
  ConstructionSequence seq;
  try {
    seq = build_construction_sequence(b, base_edge);
  } catch (const Error& e) {
    throw Error(ErrorCode::kNotMonotone, e.what());
  }
  for (const StackingStep& s : seq.steps) {
    if (!is_monotone(s.type)) {
      throw Error(ErrorCode::kNotMonotone,
                  "vertex " + std::to_string(s.child) + " is " +
                      stacking_type_name(s.type) + " for base " +
                      std::to_string(base_edge.tail) + "->" +
                      std::to_string(base_edge.head));
    }
  }
  if (options.strategy == BlockStrategy::kExactSmall &&
      n <= options.exact_threshold) {
    OracleBudget budget;
    budget.max_orderings = options.exact_max_orderings;
    budget.time_cap_seconds = 10.0;
    try {
      OracleResult tn = exact_twist_number(b, budget);
      return finish(b, tn.ordering, BlockStrategy::kExactSmall, true);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBudgetExceeded) throw;
    }
  }
  BlockLayoutResult best;
  bool have = false;
  for (bool split : {true, false}) {
    for (bool tight : {true, false}) {
      std::vector<VertexId> order =
          split ? split_and_merge(seq, n, tight)
                : insertion_order(seq, seq.steps, n, tight);
      BlockLayoutResult r =
          finish(b, std::move(order), BlockStrategy::kHeuristic, false);
      if (!have || r.layout.num_stacks < best.layout.num_stacks) {
        best = std::move(r);
        have = true;
      }
    }
  }
  return best;
}

}  // namespace dagstack
