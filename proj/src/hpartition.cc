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

#include "dagstack/hpartition.h"

#include <algorithm>
#include <map>
#include <string>

#include "dagstack/error.h"
#include "dagstack/outerplanar.h"

namespace dagstack {

int DirectedHPartition::root_part() const {
  for (int p = 0; p < num_parts(); ++p) {
    if (apex_parent_v[p] == -1) return p;
  }
  return -1;
}

DirectedGraph quotient_graph(const DirectedGraph& g,
                             const std::vector<std::vector<VertexId>>& parts) {
  const int n = g.num_vertices();
  std::vector<int> part_of(n, -1);
  for (int p = 0; p < static_cast<int>(parts.size()); ++p) {
    if (parts[p].empty()) {
      throw Error(ErrorCode::kNotAPartition,
                  "part " + std::to_string(p) + " is empty");
    }
    for (VertexId v : parts[p]) {
      if (v < 0 || v >= n || part_of[v] != -1) {
        throw Error(ErrorCode::kNotAPartition,
                    "vertex " + std::to_string(v) +
                        " is out of range or in two parts");
      }
      part_of[v] = p;
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (part_of[v] == -1) {
      throw Error(ErrorCode::kNotAPartition,
                  "vertex " + std::to_string(v) + " is in no part");
    }
  }
  std::map<std::pair<int, int>, int> witness;  // (lo, hi) -> first edge id
  std::vector<Edge> edges;
  for (int id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    int a = part_of[e.tail], b = part_of[e.head];
    if (a == b) continue;
    auto key = std::minmax(a, b);
    auto [it, fresh] = witness.emplace(key, id);
    if (fresh) {
      edges.push_back({a, b});
      continue;
    }
    const Edge& f = g.edge(it->second);
    if (part_of[f.tail] != a) {
      throw Error(ErrorCode::kMixedDirections,
                  "edges " + std::to_string(f.tail) + "->" +
                      std::to_string(f.head) + " and " +
                      std::to_string(e.tail) + "->" + std::to_string(e.head) +
                      " join parts " + std::to_string(a) + " and " +
                      std::to_string(b) + " in opposite directions");
    }
  }
  return DirectedGraph(static_cast<int>(parts.size()), std::move(edges));
}

namespace {

bool cover_search(const std::vector<Edge>& cut, int budget,
                  std::vector<char>& chosen, std::vector<VertexId>& cover) {
  const Edge* open = nullptr;
  for (const Edge& e : cut) {
    if (!chosen[e.tail] && !chosen[e.head]) {
      open = &e;
      break;
    }
  }
  if (open == nullptr) return true;
  if (budget == 0) return false;
  for (VertexId v : {open->tail, open->head}) {
    chosen[v] = 1;
    cover.push_back(v);
    if (cover_search(cut, budget - 1, chosen, cover)) return true;
    cover.pop_back();
    chosen[v] = 0;
  }
  return false;
}

}  // namespace

CutCoverResult cut_cover_number(const DirectedGraph& g,
                                std::span<const VertexId> part,
                                std::optional<std::span<const VertexId>> scope,
                                int size_cap) {
  if (size_cap < 0 || size_cap > 6) {
    throw Error(ErrorCode::kPreconditionViolated,
                "size cap " + std::to_string(size_cap) + " outside [0, 6]");
  }
  const int n = g.num_vertices();
  std::vector<char> inside(n, 0), in_scope(n, scope ? 0 : 1);
  for (VertexId v : part) inside[v] = 1;
  if (scope) {
    for (VertexId v : *scope) in_scope[v] = 1;
  }
  // Orient every cut edge as (inside endpoint, outside endpoint).
  std::vector<Edge> cut;
  for (const Edge& e : g.edges()) {
    if (inside[e.tail] && !inside[e.head] && in_scope[e.head]) {
      cut.push_back({e.tail, e.head});
    } else if (inside[e.head] && !inside[e.tail] && in_scope[e.tail]) {
      cut.push_back({e.head, e.tail});
    }
  }
  std::vector<char> chosen(n, 0);
  CutCoverResult r;
  for (int k = 0; k <= size_cap; ++k) {
    if (cover_search(cut, k, chosen, r.cover)) {
      std::sort(r.cover.begin(), r.cover.end());
      r.size = static_cast<int>(r.cover.size());
      return r;
    }
  }
  throw Error(ErrorCode::kCapExceeded,
              "cut cover needs more than " + std::to_string(size_cap) +
                  " vertices");
}

ConstructionSequence reorder_for_partition(const ConstructionSequence& seq,
                                           const ConstructionTree& t) {
  const int n = static_cast<int>(t.parent.size());
  std::vector<int> step_of(n, -1);
  for (int i = 0; i < static_cast<int>(seq.steps.size()); ++i) {
    step_of[seq.steps[i].child] = i;
  }
  ConstructionSequence out;
  out.base = seq.base;
  auto append_below = [&](VertexId u) {
    std::vector<VertexId> below = transitive_subgraph_below(t, u);
    std::sort(below.begin(), below.end(), [&](VertexId a, VertexId b) {
      return step_of[a] < step_of[b];
    });
    for (VertexId z : below) {
      if (z != u) out.steps.push_back(seq.steps[step_of[z]]);
    }
  };
  append_below(seq.base.head);
  for (const StackingStep& s : seq.steps) {
    if (t.label[s.child] != Label::kM) continue;
    out.steps.push_back(s);
    append_below(s.child);
  }
  std::vector<char> present(n, 0);
  present[seq.base.tail] = present[seq.base.head] = 1;
  for (const StackingStep& s : out.steps) {
    if (!present[s.parent_edge.tail] || !present[s.parent_edge.head] ||
        present[s.child]) {
      throw Error(ErrorCode::kInternal,
                  "reordered sequence stacks " + std::to_string(s.child) +
                      " before its parents");
    }
    present[s.child] = 1;
  }
  if (out.steps.size() != seq.steps.size()) {
    throw Error(ErrorCode::kInternal, "reordered sequence lost steps");
  }
  return out;
}

std::vector<VertexId> expand_parts(const DirectedHPartition& hp,
                                   std::span<const VertexId> quotient_vertices) {
  std::vector<VertexId> out;
  for (VertexId q : quotient_vertices) {
    out.insert(out.end(), hp.parts[q].begin(), hp.parts[q].end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool replace_on_path(std::vector<VertexId>& path, Edge ab, VertexId z) {
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    if (path[i] == ab.tail && path[i + 1] == ab.head) {
      path.insert(path.begin() + static_cast<long>(i) + 1, z);
      return true;
    }
  }
  return false;
}

std::vector<VertexId> drop_endpoint(std::vector<VertexId> path, VertexId v) {
  if (!path.empty() && path.front() == v) {
    path.erase(path.begin());
  } else if (!path.empty() && path.back() == v) {
    path.pop_back();
  }
  return path;
}

VertexId neighbour_on_path(const std::vector<VertexId>& path, VertexId v) {
  if (path.size() < 2) return -1;
  if (path.front() == v) return path[1];
  if (path.back() == v) return path[path.size() - 2];
  return -1;
}

}  // namespace

DirectedHPartition construct_directed_h_partition(
    const DirectedGraph& g, const ConstructionSequence& seq,
    const ConstructionTree& t) {
  const int n = g.num_vertices();
  if (!is_maximal_outerplanar_sequence(seq, g)) {
    throw Error(ErrorCode::kNotMaximalOuterplanar,
                "some edge has too many vertices stacked onto it");
  }
  for (const StackingStep& s : seq.steps) {
    if (classify_stacking(s.parent_edge, s.child, g) ==
        StackingType::kCyclic) {
      throw Error(ErrorCode::kCyclicStackingFound,
                  "vertex " + std::to_string(s.child) + " is cyclic");
    }
  }
  ConstructionSequence order = reorder_for_partition(seq, t);
  const VertexId x = seq.base.tail, y = seq.base.head;

  // Parts in creation order; re-indexed by apex id at the end.
  std::vector<int> part_of(n, -1);
  std::vector<VertexId> apex;
  std::vector<std::vector<VertexId>> q1p, q2p;
  std::vector<VertexId> pv, pw;
  std::map<std::pair<int, int>, int> block_of;  // directed part pair
  std::vector<Edge> block_base, block_init;
  std::vector<int> block_source;

  auto new_part = [&](VertexId u, VertexId v, VertexId w,
                      std::vector<VertexId> a, std::vector<VertexId> b) {
    part_of[u] = static_cast<int>(apex.size());
    apex.push_back(u);
    pv.push_back(v);
    pw.push_back(w);
    q1p.push_back(std::move(a));
    q2p.push_back(std::move(b));
    return part_of[u];
  };
  new_part(x, -1, -1, {}, {});
  new_part(y, x, x, {x, y}, {x, y});
  block_of[{0, 1}] = 0;
  block_base.push_back({0, 1});
  block_init.push_back({-1, -1});
  block_source.push_back(-1);

  for (const StackingStep& s : order.steps) {
    const VertexId u = s.child;
    const Edge vw = s.parent_edge;
    const StackingType type = classify_stacking(vw, u, g);
    if (type == StackingType::kTransitive) {
      const int p = part_of[t.parent[u]];
      part_of[u] = p;
      if (!replace_on_path(q1p[p], vw, u) && !replace_on_path(q2p[p], vw, u)) {
        throw Error(ErrorCode::kInternal,
                    "transitive vertex " + std::to_string(u) +
                        " stacked onto an edge outside both paths");
      }
      continue;
    }
    const bool right = type == StackingType::kMonotoneRight;
    const int a = part_of[vw.tail], b = part_of[vw.head];
    const int p =
        right ? new_part(u, vw.tail, vw.head, {vw.tail, u}, {vw.head, u})
              : new_part(u, vw.tail, vw.head, {u, vw.tail}, {u, vw.head});
    auto directed = [&](int q) {
      return right ? std::pair{q, p} : std::pair{p, q};
    };
    if (a == b) {
      const int blk = static_cast<int>(block_base.size());
      auto key = directed(a);
      block_of[key] = blk;
      block_base.push_back({key.first, key.second});
      block_init.push_back(vw);
      block_source.push_back(a);
    } else {
      auto it = block_of.find({a, b});
      if (it == block_of.end()) it = block_of.find({b, a});
      if (it == block_of.end()) {
        throw Error(ErrorCode::kInternal, "parent parts are not adjacent");
      }
      const int blk = it->second;
      block_of[directed(a)] = blk;
      block_of[directed(b)] = blk;
    }
  }

  const int k = static_cast<int>(apex.size());
  std::vector<int> by_apex(k);
  for (int i = 0; i < k; ++i) by_apex[i] = i;
  std::sort(by_apex.begin(), by_apex.end(),
            [&](int i, int j) { return apex[i] < apex[j]; });
  std::vector<int> new_index(k);
  for (int i = 0; i < k; ++i) new_index[by_apex[i]] = i;

  DirectedHPartition hp;
  hp.parts.assign(k, {});
  hp.part_of.assign(n, -1);
  for (VertexId v = 0; v < n; ++v) {
    hp.part_of[v] = new_index[part_of[v]];
    hp.parts[hp.part_of[v]].push_back(v);
  }
  hp.apex.resize(k);
  hp.q1.resize(k);
  hp.q2.resize(k);
  hp.q1_plus.resize(k);
  hp.q2_plus.resize(k);
  hp.apex_parent_v.resize(k);
  hp.apex_parent_w.resize(k);
  for (int old = 0; old < k; ++old) {
    const int i = new_index[old];
    hp.apex[i] = apex[old];
    hp.apex_parent_v[i] = pv[old];
    hp.apex_parent_w[i] = pw[old];
    hp.q1_plus[i] = q1p[old];
    hp.q2_plus[i] = q2p[old];
    if (pv[old] != -1) {
      hp.q1[i] = drop_endpoint(q1p[old], pv[old]);
      hp.q2[i] = drop_endpoint(q2p[old], pw[old]);
    }
  }
  hp.quotient = quotient_graph(g, hp.parts);

  std::vector<Edge> tracked;
  std::map<Edge, int> tracked_block;
  for (const auto& [pair, blk] : block_of) {
    Edge e{new_index[pair.first], new_index[pair.second]};
    tracked.push_back(e);
    tracked_block[e] = blk;
  }
  std::sort(tracked.begin(), tracked.end());
  if (!std::equal(tracked.begin(), tracked.end(), hp.quotient.edges().begin(),
                  hp.quotient.edges().end())) {
    throw Error(ErrorCode::kInternal,
                "quotient edges differ from the construction");
  }
  for (const Edge& e : hp.quotient.edges()) {
    hp.block_of_quotient_edge.push_back(tracked_block[e]);
  }
  for (size_t b = 0; b < block_base.size(); ++b) {
    hp.block_base.push_back(
        {new_index[block_base[b].tail], new_index[block_base[b].head]});
    hp.block_init_edge.push_back(block_init[b]);
    hp.block_source_part.push_back(
        block_source[b] < 0 ? -1 : new_index[block_source[b]]);
  }

  // Certificates.
  const int num_blocks = static_cast<int>(block_base.size());
  std::vector<std::vector<VertexId>> block_parts(num_blocks);
  for (int id = 0; id < hp.quotient.num_edges(); ++id) {
    const Edge& e = hp.quotient.edge(id);
    auto& bp = block_parts[hp.block_of_quotient_edge[id]];
    bp.push_back(e.tail);
    bp.push_back(e.head);
  }
  for (int b = 0; b < num_blocks; ++b) {
    auto& bp = block_parts[b];
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
    auto in_block = [&](VertexId v) {
      return std::binary_search(bp.begin(), bp.end(), hp.part_of[v]);
    };
    for (int p : bp) {
      CutCoverCertificate c;
      c.part = p;
      c.scope = bp;
      const VertexId v = hp.apex_parent_v[p], w = hp.apex_parent_w[p];
      if (v == -1) {
        c.cover = {hp.apex[p]};
      } else if (in_block(v) && in_block(w)) {
        c.cover = {v, w, neighbour_on_path(hp.q1_plus[p], v),
                   neighbour_on_path(hp.q2_plus[p], w)};
      } else if (hp.block_source_part[b] == p) {
        c.cover = {hp.block_init_edge[b].tail, hp.block_init_edge[b].head};
      } else {
        throw Error(ErrorCode::kInternal,
                    "no certificate shape applies to part " +
                        std::to_string(p) + " in block " + std::to_string(b));
      }
      std::sort(c.cover.begin(), c.cover.end());
      c.cover.erase(std::unique(c.cover.begin(), c.cover.end()),
                    c.cover.end());
      hp.certificates.push_back(std::move(c));
    }
  }
  return hp;
}

PartitionReport verify_partition_properties(const DirectedGraph& g,
                                            const DirectedHPartition& hp,
                                            const ConstructionTree& t,
                                            int cross_check_limit) {
  PartitionReport r;
  auto fail = [&](std::string msg) {
    if (r.failures.size() < 32) r.failures.push_back(std::move(msg));
  };
  const int n = g.num_vertices();
  DirectedGraph h;
  try {
    h = quotient_graph(g, hp.parts);
    r.precheck = true;
  } catch (const Error& e) {
    fail(std::string("precheck: ") + e.what());
    return r;
  }
  std::vector<int> part_of(n);
  for (int p = 0; p < hp.num_parts(); ++p) {
    for (VertexId v : hp.parts[p]) part_of[v] = p;
  }
  if (!(h == hp.quotient)) {
    r.precheck = false;
    fail("precheck: stored quotient differs from the contraction");
  }

  // P1
  r.p1 = true;
  int monotone_count = 0;
  for (VertexId u = 0; u < n; ++u) {
    if (t.label[u] != Label::kM) continue;
    ++monotone_count;
    std::vector<VertexId> below = transitive_subgraph_below(t, u);
    const auto& part = hp.parts[part_of[u]];
    if (below != part) {
      r.p1 = false;
      fail("P1: part of " + std::to_string(u) +
           " is not the transitive subgraph below it");
    }
  }
  if (monotone_count != hp.num_parts()) {
    r.p1 = false;
    fail("P1: " + std::to_string(hp.num_parts()) + " parts for " +
         std::to_string(monotone_count) + " monotone vertices");
  }

  // P2
  r.p2 = true;
  auto on_path = [](const std::vector<VertexId>& path, VertexId a,
                    VertexId b) {
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      if ((path[i] == a && path[i + 1] == b) ||
          (path[i] == b && path[i + 1] == a)) {
        return true;
      }
    }
    return false;
  };
  for (int p = 0; p < hp.num_parts(); ++p) {
    for (const auto* path : {&hp.q1[p], &hp.q2[p]}) {
      for (size_t i = 0; i < path->size(); ++i) {
        if (part_of[(*path)[i]] != p) {
          r.p2 = false;
          fail("P2: path of part " + std::to_string(p) + " leaves the part");
        }
        if (i + 1 < path->size() && !g.has_edge((*path)[i], (*path)[i + 1])) {
          r.p2 = false;
          fail("P2: path of part " + std::to_string(p) +
               " is not a directed path");
        }
      }
    }
  }
  for (VertexId c = 0; c < n; ++c) {
    if (t.is_base_vertex(c)) continue;
    const Edge& e = t.parent_edge[c];
    const int p = part_of[e.tail];
    if (part_of[e.head] != p || part_of[c] == p) continue;
    if (!on_path(hp.q1[p], e.tail, e.head) &&
        !on_path(hp.q2[p], e.tail, e.head)) {
      r.p2 = false;
      fail("P2: vertex " + std::to_string(c) + " is stacked onto " +
           std::to_string(e.tail) + "->" + std::to_string(e.head) +
           " outside Q1 and Q2");
    }
  }

  // P3
  r.p3 = true;
  if (!is_acyclic(h)) {
    r.p3 = false;
    fail("P3: quotient has a directed cycle");
  } else {
    if (!is_outerplanar(h).outerplanar) {
      r.p3 = false;
      fail("P3: quotient is not outerplanar");
    }
    try {
      if (!monotonicity_profile(h).block_monotone) {
        r.p3 = false;
        fail("P3: quotient is not block-monotone");
      }
    } catch (const Error& e) {
      r.p3 = false;
      fail(std::string("P3: ") + e.what());
    }
  }

  // P4
  r.p4 = true;
  if (!is_connected(h)) {
    r.p4 = false;
    fail("P4: quotient is disconnected");
    return r;
  }
  BlockCutTree bct = block_cut_tree(h);
  for (int b = 0; b < bct.num_blocks(); ++b) {
    const auto& scope_parts = bct.block_vertices[b];
    std::vector<VertexId> scope = expand_parts(hp, scope_parts);
    std::vector<char> in_scope(n, 0);
    for (VertexId v : scope) in_scope[v] = 1;
    for (VertexId p : scope_parts) {
      const CutCoverCertificate* cert = nullptr;
      for (const auto& c : hp.certificates) {
        if (c.part == p && c.scope == scope_parts) {
          cert = &c;
          break;
        }
      }
      if (cert == nullptr) {
        r.p4 = false;
        fail("P4: no certificate for part " + std::to_string(p) +
             " in block " + std::to_string(b));
        continue;
      }
      std::vector<char> covered(n, 0);
      for (VertexId v : cert->cover) covered[v] = 1;
      for (const Edge& e : g.edges()) {
        const bool tail_in = part_of[e.tail] == p;
        const bool head_in = part_of[e.head] == p;
        if (tail_in == head_in || !in_scope[e.tail] || !in_scope[e.head]) {
          continue;
        }
        if (!covered[e.tail] && !covered[e.head]) {
          r.p4 = false;
          fail("P4: certificate of part " + std::to_string(p) +
               " misses edge " + std::to_string(e.tail) + "->" +
               std::to_string(e.head));
        }
      }
      const int size = static_cast<int>(cert->cover.size());
      r.max_cut_cover = std::max(r.max_cut_cover, size);
      if (size > 4) {
        r.p4 = false;
        fail("P4: certificate of part " + std::to_string(p) + " has " +
             std::to_string(size) + " vertices");
      }
      if (n <= cross_check_limit) {
        try {
          CutCoverResult exact = cut_cover_number(
              g, hp.parts[p], std::span<const VertexId>(scope), 6);
          if (exact.size > size || exact.size > 4) {
            r.p4 = false;
            fail("P4: exact cut cover of part " + std::to_string(p) + " is " +
                 std::to_string(exact.size));
          }
        } catch (const Error& e) {
          r.p4 = false;
          fail(std::string("P4: ") + e.what());
        }
      }
    }
  }
  return r;
}

}  // namespace dagstack
