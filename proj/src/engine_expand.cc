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

namespace dagstack {

namespace {

int local_index(const std::vector<VertexId>& sorted, VertexId v) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
  if (it == sorted.end() || *it != v) return -1;
  return static_cast<int>(it - sorted.begin());
}

std::vector<VertexId> map_path(const std::vector<VertexId>& path,
                               const std::vector<VertexId>& verts) {
  std::vector<VertexId> out;
  for (VertexId v : path) out.push_back(local_index(verts, v));
  return out;
}

}  // namespace

ExpandingLayout expand_partition_layout(
    const DirectedGraph& g, const DirectedHPartition& hp,
    const Layout& h_layout, const std::vector<Layout>& part_layouts,
    const std::vector<CutCoverCertificate>& cover) {
  const int k = hp.num_parts();
  const DirectedGraph& h = hp.quotient;
  if (static_cast<int>(part_layouts.size()) != k ||
      static_cast<int>(cover.size()) != k) {
    throw Error(ErrorCode::kSpanConflict,
                "need one layout and one certificate per part");
  }
  ExpandingLayout out;
  out.host_ordering = h_layout.ordering;
  if (positions_of(h_layout.ordering, k).size() != static_cast<size_t>(k)) {
    throw Error(ErrorCode::kSpanConflict, "host ordering is not a permutation");
  }
  int s = 0, w = 1;
  for (int p = 0; p < k; ++p) {
    s = std::max(s, part_layouts[p].num_stacks);
    w = std::max(w, static_cast<int>(cover[p].cover.size()));
  }

  // Star forests of every stack of the host layout.
  std::vector<std::vector<Edge>> stack_edges(h_layout.num_stacks);
  std::vector<std::vector<int>> stack_edge_ids(h_layout.num_stacks);
  for (int id = 0; id < h.num_edges(); ++id) {
    const int st = h_layout.stack_of_edge[id];
    stack_edges[st].push_back(h.edge(id));
    stack_edge_ids[st].push_back(id);
  }
  std::vector<int> forest_of(h.num_edges(), -1);
  std::vector<VertexId> centre_of(h.num_edges(), -1);
  int f = 1;
  for (int st = 0; st < h_layout.num_stacks; ++st) {
    StarForestDecomposition d = star_forest_decomposition(stack_edges[st]);
    f = std::max(f, d.num_forests());
    for (size_t i = 0; i < stack_edge_ids[st].size(); ++i) {
      forest_of[stack_edge_ids[st][i]] = d.forest_of[i];
      centre_of[stack_edge_ids[st][i]] = d.center[i];
    }
  }

  Layout& l = out.layout;
  l.graph = g;
  out.part_spans.assign(k, {-1, -1});
  for (VertexId q : h_layout.ordering) {
    const Layout& pl = part_layouts[q];
    if (pl.graph.num_vertices() != static_cast<int>(hp.parts[q].size())) {
      throw Error(ErrorCode::kSpanConflict,
                  "layout of part " + std::to_string(q) + " has the wrong size");
    }
    const int begin = static_cast<int>(l.ordering.size());
    for (VertexId local : pl.ordering) l.ordering.push_back(hp.parts[q][local]);
    out.part_spans[q] = {begin, static_cast<int>(l.ordering.size())};
  }
  positions_of(l.ordering, g.num_vertices());

  l.stack_of_edge.assign(g.num_edges(), -1);
  for (int id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    const int a = hp.part_of[e.tail], b = hp.part_of[e.head];
    if (a == b) {
      const auto& part = hp.parts[a];
      auto local = part_layouts[a].graph.edge_id(local_index(part, e.tail),
                                                 local_index(part, e.head));
      if (!local) {
        throw Error(ErrorCode::kSpanConflict,
                    "part layout misses an edge of part " + std::to_string(a));
      }
      l.stack_of_edge[id] = part_layouts[a].stack_of_edge[*local];
      continue;
    }
    auto hid = h.edge_id(a, b);
    if (!hid) {
      throw Error(ErrorCode::kSpanConflict,
                  "edge " + std::to_string(e.tail) + "->" +
                      std::to_string(e.head) + " has no quotient edge");
    }
    const VertexId centre = centre_of[*hid];
    const auto& cv = cover[centre].cover;
    int j = -1;
    for (int i = 0; i < static_cast<int>(cv.size()); ++i) {
      if (cv[i] == e.tail || cv[i] == e.head) {
        j = i;
        break;
      }
    }
    if (j < 0) {
      throw Error(ErrorCode::kCertificateInsufficient,
                  "certificate of part " + std::to_string(centre) +
                      " does not cover " + std::to_string(e.tail) + "->" +
                      std::to_string(e.head));
    }
    l.stack_of_edge[id] =
        s + (h_layout.stack_of_edge[*hid] * f + forest_of[*hid]) * w + j;
  }
  l.num_stacks = s + h_layout.num_stacks * f * w;
  out.forests = f;
  out.cover_width = w;
  out.part_stacks = s;
  return out;
}

BlockPartition restrict_to_block(const DirectedGraph& g,
                                 const DirectedHPartition& hp,
                                 std::span<const VertexId> quotient_vertices) {
  BlockPartition bp;
  bp.quotient_vertices.assign(quotient_vertices.begin(),
                              quotient_vertices.end());
  std::sort(bp.quotient_vertices.begin(), bp.quotient_vertices.end());
  const auto& qv = bp.quotient_vertices;
  std::vector<VertexId> verts = expand_parts(hp, qv);
  bp.graph = induced_subgraph(g, verts);
  DirectedHPartition& p = bp.partition;
  const int k = static_cast<int>(qv.size());
  p.part_of.assign(verts.size(), -1);
  for (int i = 0; i < k; ++i) {
    const int q = qv[i];
    std::vector<VertexId> part = map_path(hp.parts[q], verts);
    for (VertexId v : part) p.part_of[v] = i;
    p.parts.push_back(std::move(part));
    p.apex.push_back(local_index(verts, hp.apex[q]));
    p.q1.push_back(map_path(hp.q1[q], verts));
    p.q2.push_back(map_path(hp.q2[q], verts));
    p.apex_parent_v.push_back(hp.apex_parent_v[q] < 0
                                  ? -1
                                  : local_index(verts, hp.apex_parent_v[q]));
    p.apex_parent_w.push_back(hp.apex_parent_w[q] < 0
                                  ? -1
                                  : local_index(verts, hp.apex_parent_w[q]));
  }
  p.quotient = induced_subgraph(hp.quotient, qv).graph;
  for (const CutCoverCertificate& c : hp.certificates) {
    if (c.scope != qv) continue;
    CutCoverCertificate lc;
    lc.part = local_index(qv, c.part);
    lc.cover = map_path(c.cover, verts);
    for (int i = 0; i < k; ++i) lc.scope.push_back(i);
    p.certificates.push_back(std::move(lc));
  }
  std::sort(p.certificates.begin(), p.certificates.end(),
            [](const CutCoverCertificate& a, const CutCoverCertificate& b) {
              return a.part < b.part;
            });
  return bp;
}

Layout compose_blockwise(const DirectedGraph& g, const DirectedHPartition& hp,
                         const BlockCutTree& bct,
                         const std::vector<ExpandingLayout>& expanders, int p,
                         int t, ComposeStats* stats) {
  const int n = g.num_vertices();
  const DirectedGraph& h = hp.quotient;
  if (bct.num_blocks() == 0 ||
      static_cast<int>(expanders.size()) != bct.num_blocks()) {
    throw Error(ErrorCode::kPremiseViolated,
                "need one expanding layout per block of the quotient");
  }
  int s = 0;
  for (const auto& x : expanders) s = std::max(s, x.layout.num_stacks);

  // Owning block of every edge of g.
  std::vector<int> owner(g.num_edges(), -1);
  for (int id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    const int a = hp.part_of[e.tail], b = hp.part_of[e.head];
    owner[id] = a == b ? bct.home_block[a]
                       : bct.block_of_edge[*h.edge_between(a, b)];
  }
  std::vector<std::vector<int>> owned(bct.num_blocks());
  for (int id = 0; id < g.num_edges(); ++id) owned[owner[id]].push_back(id);

  Layout out;
  out.graph = g;
  out.stack_of_edge.assign(g.num_edges(), -1);
  std::list<VertexId> order;
  std::vector<std::list<VertexId>::iterator> where(n);
  // Per cut vertex: how many child blocks already used each path edge.
  std::vector<std::vector<int>> edge_uses(hp.num_parts());

  for (int b : bct.top_down) {
    const ExpandingLayout& x = expanders[b];
    std::vector<VertexId> verts = expand_parts(hp, bct.block_vertices[b]);
    const VertexId v = bct.parent_cut[b];
    int offset = 0;
    if (v < 0) {
      for (VertexId local : x.layout.ordering) {
        VertexId u = verts[local];
        where[u] = order.insert(order.end(), u);
      }
    } else {
      const auto& pv = hp.parts[v];
      auto in_pv = [&](VertexId u) { return hp.part_of[u] == v; };
      std::vector<VertexId> touch;
      for (VertexId u : verts) {
        if (in_pv(u)) continue;
        for (VertexId nb : g.neighbors(u)) {
          if (in_pv(nb)) touch.push_back(nb);
        }
      }
      std::sort(touch.begin(), touch.end());
      touch.erase(std::unique(touch.begin(), touch.end()), touch.end());
      auto violation = [&](const std::string& why) {
        return Error(ErrorCode::kPremiseViolated,
                     "cut vertex " + std::to_string(v) + ", block " +
                         std::to_string(b) + ": " + why);
      };
      if (touch.size() != 2 || !g.adjacent(touch[0], touch[1])) {
        throw violation("the block meets the part in " +
                        std::to_string(touch.size()) +
                        " vertices instead of one edge");
      }
      const Edge& ei = g.edge(*g.edge_between(touch[0], touch[1]));
      int path = -1, index = -1;
      for (int q = 0; q < 2 && path < 0; ++q) {
        const auto& qp = q == 0 ? hp.q1[v] : hp.q2[v];
        for (size_t i = 0; i + 1 < qp.size(); ++i) {
          if (qp[i] == ei.tail && qp[i + 1] == ei.head) {
            path = q;
            index = static_cast<int>(i);
            break;
          }
        }
      }
      if (path < 0 || path >= p) {
        throw violation("edge " + std::to_string(ei.tail) + "->" +
                        std::to_string(ei.head) + " is on no stored path");
      }
      auto& uses = edge_uses[v];
      if (uses.empty()) uses.assign(2 * pv.size() + 2, 0);
      const int slot = path * static_cast<int>(pv.size() + 1) + index;
      const int cls = uses[slot]++;
      if (cls >= t) {
        throw violation("edge " + std::to_string(ei.tail) + "->" +
                        std::to_string(ei.head) + " serves more than " +
                        std::to_string(t) + " blocks");
      }
      offset = (bct.level[b] % 2) * 2 * s * p * t + path * 2 * s * t +
               cls * 2 * s + (index % 2) * s;

      std::vector<VertexId> rest;
      for (VertexId local : x.layout.ordering) {
        VertexId u = verts[local];
        if (!in_pv(u) || u == ei.tail || u == ei.head) rest.push_back(u);
      }
      auto ta = std::find(rest.begin(), rest.end(), ei.tail);
      if (ta + 1 == rest.end() || *(ta + 1) != ei.head) {
        throw violation("the expanding layout separates the edge endpoints");
      }
      auto before = where[ei.tail];
      auto after = std::next(where[ei.head]);
      for (auto it = rest.begin(); it != ta; ++it) {
        where[*it] = order.insert(before, *it);
      }
      for (auto it = ta + 2; it != rest.end(); ++it) {
        where[*it] = order.insert(after, *it);
      }
    }
    for (int id : owned[b]) {
      const Edge& e = g.edge(id);
      auto lt = std::lower_bound(verts.begin(), verts.end(), e.tail);
      auto lh = std::lower_bound(verts.begin(), verts.end(), e.head);
      auto local = x.layout.graph.edge_id(
          static_cast<VertexId>(lt - verts.begin()),
          static_cast<VertexId>(lh - verts.begin()));
      out.stack_of_edge[id] = offset + x.layout.stack_of_edge[*local];
    }
  }
  out.ordering.assign(order.begin(), order.end());
  if (static_cast<int>(out.ordering.size()) != n) {
    throw Error(ErrorCode::kInternal, "composition lost vertices");
  }
  out.num_stacks = 4 * s * p * t;
  compact_stacks(out);
  if (stats != nullptr) {
    stats->block_stacks = s;
    stats->p = p;
    stats->t = t;
  }
  return out;
}

}  // namespace dagstack
