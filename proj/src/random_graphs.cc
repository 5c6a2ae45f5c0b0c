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

#include "dagstack/random_graphs.h"

#include <algorithm>
#include <utility>

namespace dagstack {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

bool coin(Rng& rng, std::uint64_t num, std::uint64_t den) {
  return uniform_below(rng, den) < num;
}

std::vector<VertexId> random_permutation(Rng& rng, int n) {
  std::vector<VertexId> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int i = n - 1; i > 0; --i) {
    std::swap(p[i], p[uniform_below(rng, static_cast<std::uint64_t>(i) + 1)]);
  }
  return p;
}

namespace {

// Undirected edges of a random triangulation of the polygon 0..n-1.
std::vector<std::pair<int, int>> random_triangulation(Rng& rng, int n) {
  std::vector<std::pair<int, int>> edges;
  if (n < 2) return edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  if (n == 2) return edges;
  edges.push_back({0, n - 1});
  // Each pending polygon is a list of consecutive cycle vertices whose first
  // and last are joined by an existing edge.
  std::vector<std::vector<int>> pending;
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  pending.push_back(all);
  while (!pending.empty()) {
    std::vector<int> poly = std::move(pending.back());
    pending.pop_back();
    const int m = static_cast<int>(poly.size());
    if (m <= 3) continue;
    // Apex opposite the chord (poly.front(), poly.back()).
    const int k = 1 + static_cast<int>(uniform_below(rng, m - 2));
    if (k > 1) edges.push_back({poly.front(), poly[k]});
    if (k < m - 2) edges.push_back({poly[k], poly.back()});
    pending.emplace_back(poly.begin(), poly.begin() + k + 1);
    pending.emplace_back(poly.begin() + k, poly.end());
  }
  return edges;
}

DirectedGraph orient_and_relabel(Rng& rng, int n,
                                 const std::vector<std::pair<int, int>>& und) {
  std::vector<VertexId> rank = random_permutation(rng, n);
  std::vector<VertexId> label = random_permutation(rng, n);
  std::vector<Edge> edges;
  for (auto [a, b] : und) {
    if (rank[a] > rank[b]) std::swap(a, b);
    edges.push_back({label[a], label[b]});
  }
  return DirectedGraph(n, std::move(edges));
}

}  // namespace

DirectedGraph random_maximal_outerplanar_dag(Rng& rng, int n) {
  return orient_and_relabel(rng, n, random_triangulation(rng, n));
}

DirectedGraph random_outerplanar_dag(Rng& rng, int n, int keep_num,
                                     int keep_den) {
  std::vector<std::pair<int, int>> und;
  for (auto e : random_triangulation(rng, n)) {
    if (coin(rng, keep_num, keep_den)) und.push_back(e);
  }
  return orient_and_relabel(rng, n, und);
}

DirectedGraph random_monotone_outerplanar_dag(Rng& rng, int n) {
  std::vector<Edge> edges;
  if (n >= 2) edges.push_back({0, 1});
  std::vector<Edge> free_edges = edges;
  for (VertexId u = 2; u < n; ++u) {
    const std::uint64_t i = uniform_below(rng, free_edges.size());
    const Edge vw = free_edges[i];
    free_edges[i] = free_edges.back();
    free_edges.pop_back();
    Edge a, b;
    if (coin(rng, 1, 2)) {
      a = {vw.tail, u};
      b = {vw.head, u};
    } else {
      a = {u, vw.tail};
      b = {u, vw.head};
    }
    edges.push_back(a);
    edges.push_back(b);
    free_edges.push_back(a);
    free_edges.push_back(b);
  }
  return DirectedGraph(n, std::move(edges));
}

DirectedGraph random_multi_block_dag(Rng& rng, int num_blocks,
                                     int max_block_size) {
  int n = 1;
  std::vector<Edge> edges;
  for (int b = 0; b < num_blocks; ++b) {
    const int size =
        2 + static_cast<int>(uniform_below(rng, std::max(1, max_block_size - 1)));
    DirectedGraph block = random_monotone_outerplanar_dag(rng, size);
    const VertexId at = static_cast<VertexId>(uniform_below(rng, n));
    const VertexId local_at = static_cast<VertexId>(uniform_below(rng, size));
    auto map = [&](VertexId v) {
      if (v == local_at) return at;
      return n + (v < local_at ? v : v - 1);
    };
    for (const Edge& e : block.edges()) {
      edges.push_back({map(e.tail), map(e.head)});
    }
    n += size - 1;
  }
  std::vector<VertexId> label = random_permutation(rng, n);
  for (Edge& e : edges) e = {label[e.tail], label[e.head]};
  return DirectedGraph(n, std::move(edges));
}

}  // namespace dagstack
