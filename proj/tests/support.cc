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


#include "support.h"

#include <algorithm>
#include <functional>
#include <set>

namespace dagstack::testing {

namespace {

bool connected_within(const DirectedGraph& g, const std::vector<int>& label,
                      int which) {
  const int n = g.num_vertices();
  int start = -1;
  int size = 0;
  for (int v = 0; v < n; ++v) {
    if (label[v] == which) {
      ++size;
      if (start < 0) start = v;
    }
  }
  if (start < 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {start};
  seen[start] = 1;
  int reached = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++reached;
    for (VertexId u : g.neighbors(v)) {
      if (!seen[u] && label[u] == which) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  return reached == size;
}

// Minor with branch sets 1..parts whose required adjacencies are listed.
bool has_minor(const DirectedGraph& g, int parts,
               const std::vector<std::pair<int, int>>& required) {
  const int n = g.num_vertices();
  if (n < parts) return false;
  std::vector<int> label(n, 0);
  std::function<bool(int, int)> assign = [&](int v, int max_used) -> bool {
    if (v == n) {
      if (max_used < parts) return false;
      for (int p = 1; p <= parts; ++p) {
        if (!connected_within(g, label, p)) return false;
      }
      for (auto [p, q] : required) {
        bool touch = false;
        for (const Edge& e : g.edges()) {
          const int a = label[e.tail], b = label[e.head];
          if ((a == p && b == q) || (a == q && b == p)) {
            touch = true;
            break;
          }
        }
        if (!touch) return false;
      }
      return true;
    }
    // Labels are introduced in increasing order to skip relabelled copies.
    for (int l = 0; l <= std::min(parts, max_used + 1); ++l) {
      label[v] = l;
      if (assign(v + 1, std::max(max_used, l))) return true;
    }
    label[v] = 0;
    return false;
  };
  return assign(0, 0);
}

}  // namespace

bool has_k4_or_k23_minor(const DirectedGraph& g) {
  const std::vector<std::pair<int, int>> k4 = {{1, 2}, {1, 3}, {1, 4},
                                              {2, 3}, {2, 4}, {3, 4}};
  if (has_minor(g, 4, k4)) return true;
  // K2,3 with sides {1, 2} and {3, 4, 5}.
  const std::vector<std::pair<int, int>> k23 = {{1, 3}, {1, 4}, {1, 5},
                                               {2, 3}, {2, 4}, {2, 5}};
  // Branch-set labels are symmetric under relabelling only within a side,
  // so every labelling order has to be tried: permute the required pairs.
  std::vector<int> perm = {1, 2, 3, 4, 5};
  do {
    std::vector<std::pair<int, int>> req;
    for (auto [p, q] : k23) req.push_back({perm[p - 1], perm[q - 1]});
    if (has_minor(g, 5, req)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<std::vector<Edge>> polygon_triangulations(int n) {
  std::vector<std::vector<Edge>> out;
  std::function<void(std::vector<std::vector<int>>, std::vector<Edge>)> rec =
      [&](std::vector<std::vector<int>> pending, std::vector<Edge> diag) {
        while (!pending.empty() && pending.back().size() <= 3) {
          pending.pop_back();
        }
        if (pending.empty()) {
          out.push_back(diag);
          return;
        }
        const std::vector<int> poly = pending.back();
        pending.pop_back();
        const int m = static_cast<int>(poly.size());
        // The side poly[0] poly[m-1] lies in exactly one triangle, with apex
        // poly[k].
        for (int k = 1; k <= m - 2; ++k) {
          auto d = diag;
          auto p = pending;
          if (k > 1) d.push_back({poly[0], poly[k]});
          if (k < m - 2) d.push_back({poly[k], poly[m - 1]});
          p.emplace_back(poly.begin(), poly.begin() + k + 1);
          p.emplace_back(poly.begin() + k, poly.end());
          rec(p, d);
        }
      };
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  rec({all}, {});
  for (auto& t : out) {
    std::vector<Edge> full;
    for (int i = 0; i < n; ++i) full.push_back({i, (i + 1) % n});
    full.insert(full.end(), t.begin(), t.end());
    t = std::move(full);
  }
  return out;
}

std::vector<DirectedGraph> all_maximal_outerplanar_dags(int n) {
  std::set<std::vector<Edge>> seen;
  std::vector<DirectedGraph> out;
  for (const auto& und : polygon_triangulations(n)) {
    const int m = static_cast<int>(und.size());
    for (long mask = 0; mask < (1L << m); ++mask) {
      std::vector<Edge> edges;
      for (int i = 0; i < m; ++i) {
        const Edge e = und[i];
        edges.push_back((mask >> i) & 1 ? Edge{e.head, e.tail} : e);
      }
      // Canonical form: smallest sorted edge list over the 2n symmetries.
      std::vector<Edge> best;
      for (int shift = 0; shift < n; ++shift) {
        for (int flip = 0; flip < 2; ++flip) {
          std::vector<Edge> img;
          for (const Edge& e : edges) {
            auto f = [&](int v) {
              return flip ? (n - v + shift) % n : (v + shift) % n;
            };
            img.push_back({f(e.tail), f(e.head)});
          }
          std::sort(img.begin(), img.end());
          if (best.empty() || img < best) best = std::move(img);
        }
      }
      if (!seen.insert(best).second) continue;
      DirectedGraph g(n, best);
      if (is_acyclic(g)) out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace dagstack::testing
