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

#include "dagstack/block_cut_tree.h"

#include <algorithm>
#include <deque>
#include <numeric>

#include "dagstack/error.h"

namespace dagstack {
namespace {

// Iterative Hopcroft-Tarjan over the undirected edges; returns edge sets.
std::vector<std::vector<int>> biconnected_edge_sets(const DirectedGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::vector<int>> out;
  std::vector<int> edge_stack;
  int timer = 0;
  struct Frame {
    VertexId v;
    int parent_edge;
    std::size_t next;
  };
  for (VertexId s = 0; s < n; ++s) {
    if (disc[s] >= 0) continue;
    std::vector<Frame> stack = {{s, -1, 0}};
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nbrs = g.neighbors(f.v);
      auto incs = g.incident_edges(f.v);
      if (f.next < nbrs.size()) {
        VertexId w = nbrs[f.next];
        int id = incs[f.next];
        ++f.next;
        if (id == f.parent_edge) continue;
        if (disc[w] < 0) {
          edge_stack.push_back(id);
          disc[w] = low[w] = timer++;
          stack.push_back({w, id, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back(id);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      VertexId parent = stack.back().v;
      low[parent] = std::min(low[parent], low[done.v]);
      if (low[done.v] >= disc[parent]) {
        std::vector<int> block;
        while (true) {
          int id = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(id);
          if (id == done.parent_edge) break;
        }
        std::sort(block.begin(), block.end());
        out.push_back(std::move(block));
      }
    }
  }
  return out;
}

}  // namespace

BlockCutTree block_cut_tree(const DirectedGraph& g,
                            std::optional<int> root_edge) {
  const int n = g.num_vertices();
  if (!is_connected(g)) {
    throw Error(ErrorCode::kDisconnected,
                "block-cut tree needs a connected graph");
  }
  BlockCutTree t;
  std::vector<std::pair<std::vector<VertexId>, std::vector<int>>> raw;
  for (auto& edges : biconnected_edge_sets(g)) {
    std::vector<VertexId> vs;
    for (int id : edges) {
      vs.push_back(g.edge(id).tail);
      vs.push_back(g.edge(id).head);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    raw.emplace_back(std::move(vs), std::move(edges));
  }
  std::sort(raw.begin(), raw.end());
  for (auto& [vs, es] : raw) {
    t.block_vertices.push_back(std::move(vs));
    t.blocks.push_back(std::move(es));
  }
  const int nb = t.num_blocks();
  t.block_of_edge.assign(g.num_edges(), -1);
  std::vector<std::vector<int>> blocks_of_vertex(n);
  for (int b = 0; b < nb; ++b) {
    for (int id : t.blocks[b]) t.block_of_edge[id] = b;
    for (VertexId v : t.block_vertices[b]) blocks_of_vertex[v].push_back(b);
  }
  for (VertexId v = 0; v < n; ++v) {
    if (blocks_of_vertex[v].size() >= 2) t.cut_vertices.push_back(v);
  }
  for (int b = 0; b < nb; ++b) {
    for (VertexId v : t.block_vertices[b]) {
      if (blocks_of_vertex[v].size() >= 2) t.tree_edges.emplace_back(b, v);
    }
  }

  t.parent_cut.assign(nb, -1);
  t.parent_block.assign(n, -1);
  t.child_blocks.assign(n, {});
  t.level.assign(nb, 0);
  t.home_block.assign(n, -1);
  if (nb == 0) return t;

  if (root_edge) {
    if (*root_edge < 0 || *root_edge >= g.num_edges()) {
      throw Error(ErrorCode::kEdgeMissing, "root edge id out of range");
    }
    t.root = t.block_of_edge[*root_edge];
  } else {
    t.root = blocks_of_vertex[0].empty() ? 0 : blocks_of_vertex[0].front();
  }
  std::vector<char> block_seen(nb, 0);
  std::vector<char> vertex_seen(n, 0);
  std::deque<int> queue = {t.root};
  block_seen[t.root] = 1;
  while (!queue.empty()) {
    int b = queue.front();
    queue.pop_front();
    t.top_down.push_back(b);
    for (VertexId v : t.block_vertices[b]) {
      if (vertex_seen[v]) continue;
      vertex_seen[v] = 1;
      t.home_block[v] = b;
      if (blocks_of_vertex[v].size() < 2) continue;
      t.parent_block[v] = b;
      for (int c : blocks_of_vertex[v]) {
        if (block_seen[c]) continue;
        block_seen[c] = 1;
        t.parent_cut[c] = v;
        t.level[c] = t.level[b] + 1;
        t.child_blocks[v].push_back(c);
        queue.push_back(c);
      }
    }
  }
  return t;
}

}  // namespace dagstack
