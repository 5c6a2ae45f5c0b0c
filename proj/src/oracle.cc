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

#include "dagstack/oracle.h"

#include <algorithm>
#include <chrono>
#include <set>
#include <string>

#include "dagstack/error.h"

namespace dagstack {

namespace {

struct ClosedSpan {
  int left, right;
};

// Longest chain of pairwise crossing closed spans that all contain `p`
// strictly in their interior.
int chain_through(const std::vector<ClosedSpan>& closed, int p,
                  std::vector<ClosedSpan>& scratch, std::vector<int>& tails) {
  scratch.clear();
  for (const ClosedSpan& s : closed) {
    if (s.left < p && p < s.right) scratch.push_back(s);
  }
  if (scratch.size() <= 1) return static_cast<int>(scratch.size());
  std::sort(scratch.begin(), scratch.end(),
            [](const ClosedSpan& x, const ClosedSpan& y) {
              return x.left != y.left ? x.left < y.left : x.right > y.right;
            });
  tails.clear();
  for (const ClosedSpan& s : scratch) {
    auto it = std::lower_bound(tails.begin(), tails.end(), s.right);
    if (it == tails.end()) {
      tails.push_back(s.right);
    } else {
      *it = s.right;
    }
  }
  return static_cast<int>(tails.size());
}

// Depth-first enumeration of topological orderings in lexicographic order,
// pruned by a lower bound on the twist of any completion.
class OrderingSearch {
 public:
  OrderingSearch(const DirectedGraph& g, const OracleBudget& budget)
      : g_(g),
        budget_(budget),
        n_(g.num_vertices()),
        indeg_(n_),
        pos_(n_, -1),
        start_(std::chrono::steady_clock::now()) {
    if (!is_acyclic(g)) {
      throw Error(ErrorCode::kCyclicGraph, "graph has a directed cycle");
    }
    for (const Edge& e : g.edges()) ++indeg_[e.head];
  }

  // Calls leaf(prefix, twist) at complete orderings whose twist is below
  // bound(); leaf may lower the bound.
  template <typename Bound, typename Leaf>
  void run(Bound bound, Leaf leaf) {
    dfs(0, bound, leaf);
  }

  std::int64_t leaves() const { return leaves_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  template <typename Bound, typename Leaf>
  bool dfs(int closed_twist, Bound& bound, Leaf& leaf) {
    ++nodes_;
    if ((nodes_ & 1023) == 0) check_time();
    const int len = static_cast<int>(prefix_.size());
    if (len == n_) {
      ++leaves_;
      if (leaves_ > budget_.max_orderings) {
        throw Error(ErrorCode::kBudgetExceeded,
                    "more than " + std::to_string(budget_.max_orderings) +
                        " orderings examined");
      }
      return leaf(prefix_, closed_twist);
    }
    for (VertexId v = 0; v < n_; ++v) {
      if (pos_[v] != -1 || indeg_[v] != 0) continue;
      pos_[v] = len;
      prefix_.push_back(v);
      const size_t closed_before = closed_.size();
      int twist = closed_twist;
      for (VertexId u : g_.in_neighbors(v)) {
        int c = chain_through(closed_, pos_[u], scratch_, tails_);
        twist = std::max(twist, c + 1);
      }
      for (VertexId u : g_.in_neighbors(v)) closed_.push_back({pos_[u], len});
      int lower = twist;
      for (int p = 0; p < len + 1 && lower < bound(); ++p) {
        if (!has_open_edge(prefix_[p])) continue;
        lower = std::max(
            lower, chain_through(closed_, p, scratch_, tails_) + 1);
      }
      bool stop = false;
      if (lower < bound()) {
        for (VertexId w : g_.out_neighbors(v)) --indeg_[w];
        stop = dfs(twist, bound, leaf);
        for (VertexId w : g_.out_neighbors(v)) ++indeg_[w];
      }
      closed_.resize(closed_before);
      prefix_.pop_back();
      pos_[v] = -1;
      if (stop) return true;
    }
    return false;
  }

  bool has_open_edge(VertexId u) const {
    for (VertexId w : g_.out_neighbors(u)) {
      if (pos_[w] == -1) return true;
    }
    return false;
  }

  void check_time() const {
    double elapsed = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start_)
                         .count();
    if (elapsed > budget_.time_cap_seconds) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "time cap of " + std::to_string(budget_.time_cap_seconds) +
                      " s exceeded");
    }
  }

  const DirectedGraph& g_;
  const OracleBudget& budget_;
  int n_;
  std::vector<int> indeg_;
  std::vector<int> pos_;
  std::vector<VertexId> prefix_;
  std::vector<ClosedSpan> closed_;
  std::vector<ClosedSpan> scratch_;
  std::vector<int> tails_;
  std::int64_t leaves_ = 0;
  std::int64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

OracleResult exact_twist_number(const DirectedGraph& g,
                                const OracleBudget& budget) {
  OracleResult r;
  OrderingSearch search(g, budget);
  const int floor = g.num_edges() > 0 ? 1 : 0;
  int best = g.num_edges() + 1;
  search.run([&] { return best; },
             [&](const std::vector<VertexId>& ordering, int twist) {
               if (twist < best) {
                 best = twist;
                 r.ordering = ordering;
               }
               return best <= floor;
             });
  r.value = best;
  r.orderings_examined = search.leaves();
  r.nodes = search.nodes();
  return r;
}

OracleResult exact_stack_number(const DirectedGraph& g,
                                const OracleBudget& budget) {
  if (g.num_edges() > budget.max_edges_for_coloring) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::to_string(g.num_edges()) +
                    " edges exceed the colouring limit of " +
                    std::to_string(budget.max_edges_for_coloring));
  }
  OracleResult tn = exact_twist_number(g, budget);
  OracleResult r;
  OrderingSearch search(g, budget);
  int best = g.num_edges() + 1;
  ExactColoring best_coloring;
  search.run([&] { return best; },
             [&](const std::vector<VertexId>& ordering, int) {
               ExactColoring c = exact_coloring(crossing_graph(g, ordering));
               if (c.num_stacks < best) {
                 best = c.num_stacks;
                 best_coloring = std::move(c);
                 r.ordering = ordering;
               }
               return best <= tn.value;
             });
  r.value = best;
  r.layout.graph = g;
  r.layout.ordering = r.ordering;
  r.layout.stack_of_edge = best_coloring.stack_of_edge;
  r.layout.num_stacks = best_coloring.num_stacks;
  if (g.num_edges() > 0) compact_stacks(r.layout);
  r.orderings_examined = search.leaves() + tn.orderings_examined;
  r.nodes = search.nodes() + tn.nodes;
  return r;
}

std::vector<int> longest_monotone_subsequence(std::span<const long long> seq,
                                              Monotone mode) {
  std::set<long long> seen;
  for (long long x : seq) {
    if (!seen.insert(x).second) {
      throw Error(ErrorCode::kDuplicateValues,
                  "value " + std::to_string(x) + " occurs twice");
    }
  }
  const int m = static_cast<int>(seq.size());
  auto key = [&](int i) {
    return mode == Monotone::kIncreasing ? seq[i] : -seq[i];
  };
  std::vector<int> tails;
  std::vector<int> prev(m, -1);
  for (int i = 0; i < m; ++i) {
    auto it = std::lower_bound(tails.begin(), tails.end(), i,
                               [&](int a, int b) { return key(a) < key(b); });
    if (it != tails.begin()) prev[i] = *(it - 1);
    if (it == tails.end()) {
      tails.push_back(i);
    } else {
      *it = i;
    }
  }
  std::vector<int> out;
  for (int i = tails.empty() ? -1 : tails.back(); i != -1; i = prev[i]) {
    out.push_back(i);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace dagstack
