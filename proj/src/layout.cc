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

#include "dagstack/layout.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dagstack/error.h"

namespace dagstack {

std::vector<int> positions_of(std::span<const VertexId> ordering, int n) {
  if (static_cast<int>(ordering.size()) != n) {
    throw Error(ErrorCode::kBadOrdering,
                "ordering has " + std::to_string(ordering.size()) +
                    " entries for " + std::to_string(n) + " vertices");
  }
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    VertexId v = ordering[i];
    if (v < 0 || v >= n || pos[v] != -1) {
      throw Error(ErrorCode::kBadOrdering,
                  "ordering is not a permutation (entry " + std::to_string(v) +
                      ")");
    }
    pos[v] = i;
  }
  return pos;
}

std::vector<int> Layout::positions() const {
  return positions_of(ordering, graph.num_vertices());
}

int CrossingGraph::num_crossings() const {
  int total = 0;
  for (const auto& a : adjacency) total += static_cast<int>(a.size());
  return total / 2;
}

bool CrossingGraph::crosses(int e, int f) const {
  return std::binary_search(adjacency[e].begin(), adjacency[e].end(), f);
}

namespace {

std::pair<int, int> span_of(const Edge& e, std::span<const int> pos) {
  int a = pos[e.tail], b = pos[e.head];
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

void require_topological(const DirectedGraph& g, std::span<const int> pos) {
  for (const Edge& e : g.edges()) {
    if (pos[e.tail] > pos[e.head]) {
      throw Error(ErrorCode::kNotTopological,
                  "edge " + std::to_string(e.tail) + "->" +
                      std::to_string(e.head) + " points backwards");
    }
  }
}

// Edge spans sorted by left endpoint.
struct Span {
  int left, right, id;
};

std::vector<Span> spans(const DirectedGraph& g, std::span<const int> pos) {
  std::vector<Span> out;
  out.reserve(g.num_edges());
  for (int id = 0; id < g.num_edges(); ++id) {
    auto [a, b] = span_of(g.edge(id), pos);
    out.push_back({a, b, id});
  }
  return out;
}

// Longest chain with strictly increasing `right` in the given order,
// skipping equal `left` values by the caller's sort. Returns edge ids.
std::vector<int> longest_increasing_right(const std::vector<Span>& s) {
  std::vector<int> tails;   // index into s of the chain tail per length
  std::vector<int> prev(s.size(), -1);
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    auto it = std::lower_bound(
        tails.begin(), tails.end(), s[i].right,
        [&](int idx, int r) { return s[idx].right < r; });
    int len = static_cast<int>(it - tails.begin());
    if (len > 0) prev[i] = tails[len - 1];
    if (it == tails.end()) {
      tails.push_back(i);
    } else {
      *it = i;
    }
  }
  std::vector<int> chain;
  for (int i = tails.empty() ? -1 : tails.back(); i != -1; i = prev[i]) {
    chain.push_back(s[i].id);
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace

bool edges_cross(const Edge& e, const Edge& f, std::span<const int> pos) {
  auto [a, b] = span_of(e, pos);
  auto [c, d] = span_of(f, pos);
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

bool edges_nest(const Edge& e, const Edge& f, std::span<const int> pos) {
  auto [a, b] = span_of(e, pos);
  auto [c, d] = span_of(f, pos);
  return (a < c && d < b) || (c < a && b < d);
}

CrossingGraph crossing_graph(const DirectedGraph& g,
                             std::span<const VertexId> ordering) {
  std::vector<int> pos = positions_of(ordering, g.num_vertices());
  std::vector<Span> s = spans(g, pos);
  std::sort(s.begin(), s.end(), [](const Span& x, const Span& y) {
    return std::tie(x.left, x.right) < std::tie(y.left, y.right);
  });
  CrossingGraph cg;
  cg.adjacency.assign(g.num_edges(), {});
  for (size_t i = 0; i < s.size(); ++i) {
    for (size_t j = i + 1; j < s.size() && s[j].left < s[i].right; ++j) {
      if (s[i].left < s[j].left && s[i].right < s[j].right) {
        cg.adjacency[s[i].id].push_back(s[j].id);
        cg.adjacency[s[j].id].push_back(s[i].id);
      }
    }
  }
  for (auto& a : cg.adjacency) std::sort(a.begin(), a.end());
  return cg;
}

EdgeSetResult twist_of_ordering(const DirectedGraph& g,
                                std::span<const VertexId> ordering) {
  std::vector<int> pos = positions_of(ordering, g.num_vertices());
  std::vector<Span> all = spans(g, pos);
  std::sort(all.begin(), all.end(), [](const Span& x, const Span& y) {
    return x.left != y.left ? x.left < y.left : x.right > y.right;
  });
  EdgeSetResult best;
  const int n = g.num_vertices();
  std::vector<Span> gap;
  for (int p = 0; p + 1 < n; ++p) {
    gap.clear();
    for (const Span& s : all) {
      if (s.left <= p && p < s.right) gap.push_back(s);
    }
    if (static_cast<int>(gap.size()) <= best.size) continue;
    std::vector<int> chain = longest_increasing_right(gap);
    if (static_cast<int>(chain.size()) > best.size) {
      best.size = static_cast<int>(chain.size());
      best.edges = std::move(chain);
    }
  }
  std::sort(best.edges.begin(), best.edges.end());
  return best;
}

EdgeSetResult rainbow_of_ordering(const DirectedGraph& g,
                                  std::span<const VertexId> ordering) {
  std::vector<int> pos = positions_of(ordering, g.num_vertices());
  std::vector<Span> s = spans(g, pos);
  // Strictly decreasing right endpoints == strictly increasing negated ones.
  for (Span& x : s) x.right = -x.right;
  std::sort(s.begin(), s.end(), [](const Span& x, const Span& y) {
    return x.left != y.left ? x.left < y.left : x.right > y.right;
  });
  EdgeSetResult r;
  r.edges = longest_increasing_right(s);
  r.size = static_cast<int>(r.edges.size());
  std::sort(r.edges.begin(), r.edges.end());
  return r;
}

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const CrossingGraph& cg) : cg_(cg) {}

  std::vector<int> run() {
    std::vector<int> cand(cg_.num_nodes());
    std::iota(cand.begin(), cand.end(), 0);
    // Highest degree first tends to find large cliques early.
    std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) {
      return cg_.adjacency[a].size() > cg_.adjacency[b].size();
    });
    std::vector<int> current;
    expand(current, cand);
    return best_;
  }

 private:
  void expand(std::vector<int>& current, const std::vector<int>& cand) {
    if (cand.empty()) {
      if (current.size() > best_.size()) best_ = current;
      return;
    }
    std::vector<int> order, bound;
    greedy_color(cand, order, bound);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (current.size() + bound[i] <= best_.size()) return;
      int v = order[i];
      current.push_back(v);
      std::vector<int> next;
      for (int j = 0; j < i; ++j) {
        if (cg_.crosses(v, order[j])) next.push_back(order[j]);
      }
      expand(current, next);
      current.pop_back();
    }
  }

  // Sequential colouring; bound[i] = colour count of order[0..i].
  void greedy_color(const std::vector<int>& cand, std::vector<int>& order,
                    std::vector<int>& bound) {
    std::vector<std::vector<int>> classes;
    for (int v : cand) {
      size_t c = 0;
      for (; c < classes.size(); ++c) {
        bool clash = false;
        for (int u : classes[c]) {
          if (cg_.crosses(u, v)) {
            clash = true;
            break;
          }
        }
        if (!clash) break;
      }
      if (c == classes.size()) classes.emplace_back();
      classes[c].push_back(v);
    }
    for (size_t c = 0; c < classes.size(); ++c) {
      for (int v : classes[c]) {
        order.push_back(v);
        bound.push_back(static_cast<int>(c) + 1);
      }
    }
  }

  const CrossingGraph& cg_;
  std::vector<int> best_;
};

}  // namespace

EdgeSetResult max_clique(const CrossingGraph& cg) {
  EdgeSetResult r;
  r.edges = CliqueSearch(cg).run();
  std::sort(r.edges.begin(), r.edges.end());
  r.size = static_cast<int>(r.edges.size());
  return r;
}

Layout greedy_stack_assignment(const DirectedGraph& g,
                               std::span<const VertexId> ordering) {
  std::vector<int> pos = positions_of(ordering, g.num_vertices());
  require_topological(g, pos);
  std::vector<Span> s = spans(g, pos);
  std::sort(s.begin(), s.end(), [](const Span& x, const Span& y) {
    return std::tie(x.left, x.right) < std::tie(y.left, y.right);
  });
  Layout l;
  l.graph = g;
  l.ordering.assign(ordering.begin(), ordering.end());
  l.stack_of_edge.assign(g.num_edges(), -1);
  std::vector<std::vector<Span>> open;
  for (const Span& e : s) {
    int chosen = -1;
    for (int k = 0; k < static_cast<int>(open.size()); ++k) {
      auto& st = open[k];
      std::erase_if(st, [&](const Span& o) { return o.right <= e.left; });
      bool clash = std::any_of(st.begin(), st.end(), [&](const Span& o) {
        return o.left < e.left && o.right < e.right;
      });
      if (!clash) {
        chosen = k;
        break;
      }
    }
    if (chosen < 0) {
      chosen = static_cast<int>(open.size());
      open.emplace_back();
    }
    open[chosen].push_back(e);
    l.stack_of_edge[e.id] = chosen;
  }
  l.num_stacks = static_cast<int>(open.size());
  return l;
}

namespace {

class DsaturSearch {
 public:
  DsaturSearch(const CrossingGraph& cg, int upper,
               std::vector<int> upper_coloring, int lower)
      : cg_(cg),
        n_(cg.num_nodes()),
        best_(upper),
        best_color_(std::move(upper_coloring)),
        lower_(lower),
        color_(n_, -1),
        forbidden_(n_, std::vector<int>(n_ + 1, 0)),
        sat_(n_, 0) {}

  void run() { step(0, 0); }
  int best() const { return best_; }
  const std::vector<int>& best_coloring() const { return best_color_; }

 private:
  void step(int colored, int used) {
    if (best_ <= lower_) return;
    if (colored == n_) {
      if (used < best_) {
        best_ = used;
        best_color_ = color_;
      }
      return;
    }
    int v = -1;
    for (int u = 0; u < n_; ++u) {
      if (color_[u] != -1) continue;
      if (v == -1 || sat_[u] > sat_[v] ||
          (sat_[u] == sat_[v] &&
           cg_.adjacency[u].size() > cg_.adjacency[v].size())) {
        v = u;
      }
    }
    for (int c = 0; c <= used; ++c) {
      if (forbidden_[v][c]) continue;
      int next_used = std::max(used, c + 1);
      if (next_used >= best_) continue;
      assign(v, c, +1);
      step(colored + 1, next_used);
      assign(v, c, -1);
      if (best_ <= lower_) return;
    }
  }

  void assign(int v, int c, int delta) {
    color_[v] = delta > 0 ? c : -1;
    for (int u : cg_.adjacency[v]) {
      int& f = forbidden_[u][c];
      if (delta > 0) {
        if (f++ == 0) ++sat_[u];
      } else {
        if (--f == 0) --sat_[u];
      }
    }
  }

  const CrossingGraph& cg_;
  int n_;
  int best_;
  std::vector<int> best_color_;
  int lower_;
  std::vector<int> color_;
  std::vector<std::vector<int>> forbidden_;
  std::vector<int> sat_;
};

}  // namespace

ExactColoring exact_coloring(const CrossingGraph& cg) {
  const int n = cg.num_nodes();
  ExactColoring out;
  if (n == 0) return out;
  // Greedy DSATUR colouring for the initial upper bound.
  std::vector<int> color(n, -1);
  int used = 0;
  for (int step = 0; step < n; ++step) {
    int v = -1, vsat = -1;
    for (int u = 0; u < n; ++u) {
      if (color[u] != -1) continue;
      std::vector<char> seen(n + 1, 0);
      int sat = 0;
      for (int w : cg.adjacency[u]) {
        if (color[w] != -1 && !seen[color[w]]) {
          seen[color[w]] = 1;
          ++sat;
        }
      }
      if (sat > vsat) {
        v = u;
        vsat = sat;
      }
    }
    std::vector<char> taken(n + 1, 0);
    for (int w : cg.adjacency[v]) {
      if (color[w] != -1) taken[color[w]] = 1;
    }
    int c = 0;
    while (taken[c]) ++c;
    color[v] = c;
    used = std::max(used, c + 1);
  }
  int lower = max_clique(cg).size;
  DsaturSearch search(cg, used, color, lower);
  search.run();
  out.num_stacks = search.best();
  out.stack_of_edge = search.best_coloring();
  return out;
}

ExactColoring exact_min_stacks_for_ordering(const DirectedGraph& g,
                                            std::span<const VertexId> ordering,
                                            int edge_limit) {
  if (g.num_edges() > edge_limit) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(g.num_edges()) + " edges exceed the limit of " +
                    std::to_string(edge_limit));
  }
  std::vector<int> pos = positions_of(ordering, g.num_vertices());
  require_topological(g, pos);
  return exact_coloring(crossing_graph(g, ordering));
}

LayoutCheck verify_layout(const Layout& l) {
  LayoutCheck r;
  const DirectedGraph& g = l.graph;
  std::vector<int> pos;
  try {
    pos = l.positions();
  } catch (const Error& e) {
    r.kind = ViolationKind::kBadOrdering;
    r.message = e.what();
    return r;
  }
  for (int id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    if (pos[e.tail] > pos[e.head]) {
      r.kind = ViolationKind::kNotTopological;
      r.edges = {id};
      r.message = "edge " + std::to_string(e.tail) + "->" +
                  std::to_string(e.head) + " points right to left";
      return r;
    }
  }
  if (static_cast<int>(l.stack_of_edge.size()) != g.num_edges()) {
    r.kind = ViolationKind::kUnassigned;
    r.message = "stack assignment has " +
                std::to_string(l.stack_of_edge.size()) + " entries for " +
                std::to_string(g.num_edges()) + " edges";
    return r;
  }
  for (int id = 0; id < g.num_edges(); ++id) {
    int s = l.stack_of_edge[id];
    if (s < 0 || s >= l.num_stacks) {
      r.kind = ViolationKind::kUnassigned;
      r.edges = {id};
      r.message = "edge " + std::to_string(id) + " has stack " +
                  std::to_string(s) + " outside [0, " +
                  std::to_string(l.num_stacks) + ")";
      return r;
    }
  }
  std::vector<std::vector<Span>> by_stack(l.num_stacks);
  for (int id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    by_stack[l.stack_of_edge[id]].push_back({pos[e.tail], pos[e.head], id});
  }
  for (int s = 0; s < l.num_stacks; ++s) {
    auto& es = by_stack[s];
    std::sort(es.begin(), es.end(), [](const Span& x, const Span& y) {
      return x.left != y.left ? x.left < y.left : x.right > y.right;
    });
    std::vector<const Span*> open;
    for (const Span& e : es) {
      while (!open.empty() && open.back()->right <= e.left) open.pop_back();
      if (!open.empty() && e.right > open.back()->right) {
        r.kind = ViolationKind::kCrossing;
        r.edges = {open.back()->id, e.id};
        std::sort(r.edges.begin(), r.edges.end());
        r.message = "edges " + std::to_string(r.edges[0]) + " and " +
                    std::to_string(r.edges[1]) + " cross on stack " +
                    std::to_string(s);
        return r;
      }
      open.push_back(&e);
    }
  }
  return r;
}

void compact_stacks(Layout& l) {
  std::vector<int> pos = l.positions();
  std::vector<Span> s = spans(l.graph, pos);
  std::sort(s.begin(), s.end(), [](const Span& x, const Span& y) {
    return std::tie(x.left, x.right) < std::tie(y.left, y.right);
  });
  std::vector<int> remap;
  int next = 0;
  for (const Span& e : s) {
    int old = l.stack_of_edge[e.id];
    if (old >= static_cast<int>(remap.size())) remap.resize(old + 1, -1);
    if (remap[old] == -1) remap[old] = next++;
    l.stack_of_edge[e.id] = remap[old];
  }
  l.num_stacks = next;
}

Layout restrict_layout(const Layout& l, const DirectedGraph& sub,
                       std::span<const int> edge_to_parent,
                       std::span<const VertexId> to_parent) {
  std::vector<int> local(l.graph.num_vertices(), -1);
  for (int i = 0; i < static_cast<int>(to_parent.size()); ++i) {
    local[to_parent[i]] = i;
  }
  Layout out;
  out.graph = sub;
  for (VertexId v : l.ordering) {
    if (local[v] != -1) out.ordering.push_back(local[v]);
  }
  out.stack_of_edge.resize(sub.num_edges());
  for (int id = 0; id < sub.num_edges(); ++id) {
    out.stack_of_edge[id] = l.stack_of_edge[edge_to_parent[id]];
  }
  out.num_stacks = l.num_stacks;
  compact_stacks(out);
  return out;
}

long long davies_bound(long long k) {
  if (k < 1) {
    throw Error(ErrorCode::kNonPositive,
                "twist number must be positive, got " + std::to_string(k));
  }
  if (k == 1) return 1;
  const double x = static_cast<double>(k);
  const double lg = std::log2(x);
  const double value = 2 * x * lg + 2 * x * std::log2(lg) + 10 * x;
  return static_cast<long long>(std::ceil(value - 1e-9));
}

}  // namespace dagstack
