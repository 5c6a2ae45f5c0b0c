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
#include <functional>
#include <list>
#include <map>
#include <string>

#include "dagstack/engine.h"
#include "dagstack/error.h"
#include "dagstack/outerplanar.h"

namespace dagstack {

Layout combine_block_layouts(
    const DirectedGraph& g, const BlockCutTree& bct,
    const std::vector<std::optional<Layout>>& per_block) {
  const int n = g.num_vertices();
  Layout out;
  out.graph = g;
  out.stack_of_edge.assign(g.num_edges(), -1);
  if (bct.num_blocks() == 0) {
    for (VertexId v = 0; v < n; ++v) out.ordering.push_back(v);
    return out;
  }
  int s = 0;
  for (int b = 0; b < bct.num_blocks(); ++b) {
    if (b >= static_cast<int>(per_block.size()) || !per_block[b]) {
      throw Error(ErrorCode::kMissingBlockLayout,
                  "no layout for block " + std::to_string(b));
    }
    s = std::max(s, per_block[b]->num_stacks);
  }

  std::list<VertexId> order;
  std::vector<std::list<VertexId>::iterator> where(n);
  std::vector<char> placed(n, 0);
  for (int b : bct.top_down) {
    const Layout& l = *per_block[b];
    Subgraph bs = edge_subgraph(g, bct.blocks[b]);
    const VertexId v = bct.parent_cut[b];
    const int offset = (bct.level[b] % 2) * (s + 1);
    if (v < 0) {
      for (VertexId local : l.ordering) {
        VertexId u = bs.to_parent[local];
        where[u] = order.insert(order.end(), u);
        placed[u] = 1;
      }
    } else {
      auto anchor = where[v];
      auto after = std::next(anchor);
      bool seen_v = false;
      for (VertexId local : l.ordering) {
        VertexId u = bs.to_parent[local];
        if (u == v) {
          seen_v = true;
          continue;
        }
        where[u] = order.insert(seen_v ? after : anchor, u);
        placed[u] = 1;
      }
    }
    for (int local_id = 0; local_id < bs.graph.num_edges(); ++local_id) {
      const int id = bs.edge_to_parent[local_id];
      const Edge& e = g.edge(id);
      const int local_stack = l.stack_of_edge[local_id];
      out.stack_of_edge[id] =
          (v >= 0 && (e.tail == v || e.head == v)) ? offset + s
                                                   : offset + local_stack;
    }
  }
  for (VertexId u = 0; u < n; ++u) {
    if (!placed[u]) order.push_back(u);
  }
  out.ordering.assign(order.begin(), order.end());
  out.num_stacks = 2 * (s + 1);
  compact_stacks(out);
  return out;
}

namespace {

bool is_star_forest(const std::vector<Edge>& edges) {
  std::map<VertexId, int> deg;
  for (const Edge& e : edges) {
    ++deg[e.tail];
    ++deg[e.head];
  }
  for (const Edge& e : edges) {
    if (deg[e.tail] != 1 && deg[e.head] != 1) return false;
  }
  return true;
}

void assign_centres(std::span<const Edge> edges,
                    StarForestDecomposition& d) {
  d.center.assign(edges.size(), -1);
  for (const auto& forest : d.forests) {
    std::map<VertexId, int> deg;
    for (int i : forest) {
      ++deg[edges[i].tail];
      ++deg[edges[i].head];
    }
    for (int i : forest) {
      const Edge& e = edges[i];
      if (deg[e.tail] > 1) {
        d.center[i] = e.tail;
      } else if (deg[e.head] > 1) {
        d.center[i] = e.head;
      } else {
        d.center[i] = std::min(e.tail, e.head);
      }
    }
  }
}

bool exact_classes(std::span<const Edge> edges, int k, std::vector<int>& cls) {
  const int m = static_cast<int>(edges.size());
  std::vector<std::vector<Edge>> members(k);
  std::function<bool(int, int)> go = [&](int i, int used) {
    if (i == m) return true;
    for (int c = 0; c < std::min(k, used + 1); ++c) {
      members[c].push_back(edges[i]);
      if (is_star_forest(members[c])) {
        cls[i] = c;
        if (go(i + 1, std::max(used, c + 1))) return true;
      }
      members[c].pop_back();
    }
    return false;
  };
  return go(0, 0);
}

}  // namespace

StarForestDecomposition star_forest_decomposition(std::span<const Edge> edges) {
  StarForestDecomposition d;
  const int m = static_cast<int>(edges.size());
  d.forest_of.assign(m, -1);
  if (m == 0) return d;

  std::map<VertexId, int> index;
  for (const Edge& e : edges) {
    index.emplace(e.tail, 0);
    index.emplace(e.head, 0);
  }
  int nv = 0;
  for (auto& [v, i] : index) i = nv++;
  std::vector<Edge> local;
  for (const Edge& e : edges) {
    VertexId a = index[e.tail], b = index[e.head];
    local.push_back({std::min(a, b), std::max(a, b)});
  }
  {
    std::vector<Edge> dedup = local;
    std::sort(dedup.begin(), dedup.end());
    if (std::adjacent_find(dedup.begin(), dedup.end()) != dedup.end()) {
      throw Error(ErrorCode::kInvariantViolation, "repeated edge");
    }
    if (!is_outerplanar(DirectedGraph(nv, dedup)).outerplanar) {
      throw Error(ErrorCode::kNotOuterplanar,
                  "edge set is not outerplanar");
    }
  }

  if (m <= 16) {
    for (int k = 1; k <= 3; ++k) {
      std::vector<int> cls(m, -1);
      if (exact_classes(edges, k, cls)) {
        d.forests.assign(k, {});
        for (int i = 0; i < m; ++i) {
          d.forests[cls[i]].push_back(i);
          d.forest_of[i] = cls[i];
        }
        assign_centres(edges, d);
        return d;
      }
    }
  }

  // Orientation with out-degree at most two by repeatedly removing a vertex
  // of minimum remaining degree.
  std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (nbr, edge)
  for (int i = 0; i < m; ++i) {
    adj[local[i].tail].push_back({local[i].head, i});
    adj[local[i].head].push_back({local[i].tail, i});
  }
  std::vector<int> deg(nv);
  for (int v = 0; v < nv; ++v) deg[v] = static_cast<int>(adj[v].size());
  std::vector<char> removed(nv, 0);
  // parent[f][v]: head of v's out-edge in forest f, and that edge.
  std::vector<std::vector<int>> parent(2, std::vector<int>(nv, -1));
  std::vector<std::vector<int>> parent_edge(2, std::vector<int>(nv, -1));
  for (int round = 0; round < nv; ++round) {
    int v = -1;
    for (int u = 0; u < nv; ++u) {
      if (!removed[u] && (v == -1 || deg[u] < deg[v])) v = u;
    }
    if (deg[v] > 2) {
      throw Error(ErrorCode::kNotOuterplanar,
                  "edge set has a subgraph of minimum degree 3");
    }
    removed[v] = 1;
    int f = 0;
    for (auto [u, i] : adj[v]) {
      if (removed[u]) continue;
      parent[f][v] = u;
      parent_edge[f][v] = i;
      ++f;
      --deg[u];
    }
  }
  std::vector<std::vector<int>> buckets(4);
  for (int f = 0; f < 2; ++f) {
    std::vector<int> depth(nv, -1);
    std::function<int(int)> depth_of = [&](int v) {
      if (depth[v] >= 0) return depth[v];
      return depth[v] = parent[f][v] < 0 ? 0 : depth_of(parent[f][v]) + 1;
    };
    for (int v = 0; v < nv; ++v) {
      if (parent[f][v] < 0) continue;
      const int i = parent_edge[f][v];
      buckets[2 * f + depth_of(parent[f][v]) % 2].push_back(i);
    }
  }
  for (auto& bucket : buckets) {
    if (bucket.empty()) continue;
    std::sort(bucket.begin(), bucket.end());
    const int f = static_cast<int>(d.forests.size());
    for (int i : bucket) d.forest_of[i] = f;
    d.forests.push_back(std::move(bucket));
  }
  assign_centres(edges, d);
  return d;
}

}  // namespace dagstack
