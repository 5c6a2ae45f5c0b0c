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

#include "dagstack/twotree.h"

#include <algorithm>
#include <queue>
#include <string>

#include "dagstack/block_cut_tree.h"
#include "dagstack/error.h"

namespace dagstack {

const char* stacking_type_name(StackingType type) {
  switch (type) {
    case StackingType::kCyclic: return "cyclic";
    case StackingType::kTransitive: return "transitive";
    case StackingType::kMonotoneLeft: return "monotone-left";
    case StackingType::kMonotoneRight: return "monotone-right";
  }
  return "?";
}

std::vector<VertexId> ConstructionSequence::vertex_order() const {
  std::vector<VertexId> order = {base.tail, base.head};
  for (const StackingStep& s : steps) order.push_back(s.child);
  return order;
}

ConstructionSequence build_construction_sequence(const DirectedGraph& g,
                                                 Edge base) {
  const int n = g.num_vertices();
  if (!g.has_edge(base.tail, base.head)) {
    throw Error(ErrorCode::kEdgeMissing,
                "base edge " + std::to_string(base.tail) + "->" +
                    std::to_string(base.head) + " not in graph");
  }
  if (g.num_edges() != 2 * n - 3 || !is_connected(g)) {
    throw Error(ErrorCode::kNotTwoTree,
                "a 2-tree on " + std::to_string(n) + " vertices has " +
                    std::to_string(2 * n - 3) + " edges and is connected");
  }
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> cand;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 2) cand.push(v);
  }
  std::vector<Edge> parent_edge(n);
  int remaining = n;
  while (remaining > 2) {
    VertexId u = -1;
    std::vector<VertexId> nb;
    while (!cand.empty()) {
      VertexId c = cand.top();
      cand.pop();
      if (removed[c] || deg[c] != 2 || c == base.tail || c == base.head) {
        continue;
      }
      nb.clear();
      for (VertexId w : g.neighbors(c)) {
        if (!removed[w]) nb.push_back(w);
      }
      if (g.adjacent(nb[0], nb[1])) {
        u = c;
        break;
      }
    }
    if (u < 0) {
      throw Error(ErrorCode::kNotTwoTree,
                  "no simplicial degree-2 vertex left to peel");
    }
    removed[u] = 1;
    --remaining;
    parent_edge[u] = g.edge(*g.edge_between(nb[0], nb[1]));
    for (VertexId w : nb) {
      if (--deg[w] == 2) cand.push(w);
    }
  }
  if (removed[base.tail] || removed[base.head]) {
    throw Error(ErrorCode::kInternal, "peeling removed a base vertex");
  }

  // Emit children in id order once both parents exist.
  std::vector<std::vector<VertexId>> waiting(n);
  std::vector<int> missing(n, 0);
  std::vector<char> present(n, 0);
  present[base.tail] = present[base.head] = 1;
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId u = 0; u < n; ++u) {
    if (!removed[u]) continue;
    for (VertexId p : {parent_edge[u].tail, parent_edge[u].head}) {
      if (!present[p]) {
        ++missing[u];
        waiting[p].push_back(u);
      }
    }
    if (missing[u] == 0) ready.push(u);
  }
  ConstructionSequence seq;
  seq.base = base;
  while (!ready.empty()) {
    VertexId u = ready.top();
    ready.pop();
    seq.steps.push_back(
        {u, parent_edge[u], classify_stacking(parent_edge[u], u, g)});
    present[u] = 1;
    for (VertexId c : waiting[u]) {
      if (--missing[c] == 0) ready.push(c);
    }
  }
  if (static_cast<int>(seq.steps.size()) != n - 2) {
    throw Error(ErrorCode::kInternal, "construction order incomplete");
  }
  return seq;
}

DirectedGraph replay(const ConstructionSequence& seq, int n) {
  std::vector<Edge> edges = {seq.base};
  std::vector<char> present(n, 0);
  present[seq.base.tail] = present[seq.base.head] = 1;
  for (const StackingStep& s : seq.steps) {
    if (present[s.child] || !present[s.parent_edge.tail] ||
        !present[s.parent_edge.head]) {
      throw Error(ErrorCode::kInvariantViolation,
                  "invalid stacking step for vertex " +
                      std::to_string(s.child));
    }
    present[s.child] = 1;
    const VertexId v = s.parent_edge.tail, w = s.parent_edge.head;
    const VertexId u = s.child;
    switch (s.type) {
      case StackingType::kCyclic:
        edges.push_back({w, u});
        edges.push_back({u, v});
        break;
      case StackingType::kTransitive:
        edges.push_back({v, u});
        edges.push_back({u, w});
        break;
      case StackingType::kMonotoneLeft:
        edges.push_back({u, v});
        edges.push_back({u, w});
        break;
      case StackingType::kMonotoneRight:
        edges.push_back({v, u});
        edges.push_back({w, u});
        break;
    }
  }
  return DirectedGraph(n, std::move(edges));
}

std::vector<int> stacked_counts(const ConstructionSequence& seq,
                                const DirectedGraph& g) {
  std::vector<int> count(g.num_edges(), 0);
  for (const StackingStep& s : seq.steps) {
    auto id = g.edge_between(s.parent_edge.tail, s.parent_edge.head);
    if (!id) throw Error(ErrorCode::kEdgeMissing, "parent edge missing");
    ++count[*id];
  }
  return count;
}

bool is_maximal_outerplanar_sequence(const ConstructionSequence& seq,
                                     const DirectedGraph& g) {
  std::vector<int> count = stacked_counts(seq, g);
  int base_id = *g.edge_between(seq.base.tail, seq.base.head);
  for (int id = 0; id < g.num_edges(); ++id) {
    if (count[id] > (id == base_id ? 2 : 1)) return false;
  }
  return true;
}

StackingType classify_stacking(Edge parent_edge, VertexId child,
                               const DirectedGraph& g) {
  const VertexId v = parent_edge.tail, w = parent_edge.head, u = child;
  if (!g.adjacent(u, v) || !g.adjacent(u, w)) {
    throw Error(ErrorCode::kEdgeMissing,
                "vertex " + std::to_string(u) + " is not adjacent to both " +
                    std::to_string(v) + " and " + std::to_string(w));
  }
  const bool vu = g.has_edge(v, u);
  const bool wu = g.has_edge(w, u);
  if (vu && wu) return StackingType::kMonotoneRight;
  if (!vu && !wu) return StackingType::kMonotoneLeft;
  if (vu) return StackingType::kTransitive;
  return StackingType::kCyclic;
}

ConstructionTree build_construction_tree(const ConstructionSequence& seq,
                                         const DirectedGraph& g) {
  const int n = g.num_vertices();
  ConstructionTree t;
  t.base = seq.base;
  t.root = seq.base.tail;
  t.parent.assign(n, -1);
  t.children.assign(n, {});
  t.label.assign(n, Label::kT);
  t.type.assign(n, StackingType::kMonotoneRight);
  t.parent_edge.assign(n, seq.base);
  t.position.assign(n, -1);
  std::vector<VertexId> order = seq.vertex_order();
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    t.position[order[i]] = i;
  }
  t.label[seq.base.tail] = Label::kM;
  t.label[seq.base.head] = Label::kM;
  t.parent[seq.base.head] = seq.base.tail;
  t.children[seq.base.tail].push_back(seq.base.head);
  for (const StackingStep& s : seq.steps) {
    StackingType type = classify_stacking(s.parent_edge, s.child, g);
    if (type == StackingType::kCyclic) {
      throw Error(ErrorCode::kCyclicStackingFound,
                  "vertex " + std::to_string(s.child) + " is cyclic on " +
                      std::to_string(s.parent_edge.tail) + "->" +
                      std::to_string(s.parent_edge.head));
    }
    VertexId a = s.parent_edge.tail, b = s.parent_edge.head;
    VertexId younger = t.position[a] > t.position[b] ? a : b;
    t.parent[s.child] = younger;
    t.children[younger].push_back(s.child);
    t.label[s.child] = is_monotone(type) ? Label::kM : Label::kT;
    t.type[s.child] = type;
    t.parent_edge[s.child] = s.parent_edge;
  }
  return t;
}

std::vector<VertexId> transitive_subgraph_below(const ConstructionTree& t,
                                                VertexId v) {
  std::vector<VertexId> out = {v};
  std::vector<VertexId> stack = {v};
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId c : t.children[u]) {
      if (t.label[c] == Label::kT) {
        out.push_back(c);
        stack.push_back(c);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Classifies every step of the sequence rooted at `base`; returns
// (all monotone, all transitive).
std::pair<bool, bool> classify_all(const DirectedGraph& g, Edge base) {
  ConstructionSequence seq = build_construction_sequence(g, base);
  bool mono = true, trans = true;
  for (const StackingStep& s : seq.steps) {
    StackingType type = s.type;
    if (type == StackingType::kCyclic) {
      throw Error(ErrorCode::kCyclicGraph, "directed 2-tree has a cycle");
    }
    mono = mono && is_monotone(type);
    trans = trans && type == StackingType::kTransitive;
    if (!mono && !trans) break;
  }
  return {mono, trans};
}

}  // namespace

MonotonicityReport monotonicity_profile(const DirectedGraph& g) {
  if (!is_acyclic(g)) {
    throw Error(ErrorCode::kCyclicGraph, "graph has a directed cycle");
  }
  MonotonicityReport report;
  report.block_monotone = true;
  for (const auto& comp : connected_components(g)) {
    Subgraph cs = induced_subgraph(g, comp);
    if (cs.graph.num_edges() == 0) continue;
    BlockCutTree bct = block_cut_tree(cs.graph);
    for (int b = 0; b < bct.num_blocks(); ++b) {
      Subgraph bs = edge_subgraph(cs.graph, bct.blocks[b]);
      BlockMonotonicity bm;
      for (VertexId v : bs.to_parent) bm.vertices.push_back(cs.to_parent[v]);
      const DirectedGraph& bg = bs.graph;
      if (bg.num_edges() != 2 * bg.num_vertices() - 3) {
        throw Error(ErrorCode::kNotTwoTreeBlock,
                    "block with " + std::to_string(bg.num_vertices()) +
                        " vertices and " + std::to_string(bg.num_edges()) +
                        " edges is not a 2-tree");
      }
      auto lift = [&](const Edge& e) {
        return Edge{cs.to_parent[bs.to_parent[e.tail]],
                    cs.to_parent[bs.to_parent[e.head]]};
      };
      for (const Edge& e : bg.edges()) {
        std::pair<bool, bool> r;
        try {
          r = classify_all(bg, e);
        } catch (const Error& err) {
          if (err.code() == ErrorCode::kNotTwoTree) {
            throw Error(ErrorCode::kNotTwoTreeBlock, err.what());
          }
          throw;
        }
        if (r.first && !bm.monotone) {
          bm.monotone = true;
          bm.monotone_base = lift(e);
        }
        if (r.second && !bm.transitive) {
          bm.transitive = true;
          bm.transitive_base = lift(e);
        }
        if (bm.monotone && bm.transitive) break;
      }
      report.block_monotone = report.block_monotone && bm.monotone;
      report.blocks.push_back(std::move(bm));
    }
  }
  return report;
}

}  // namespace dagstack
