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


#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "dagstack/adversary.h"
#include "dagstack/error.h"
#include "dagstack/layout.h"
#include "dagstack/oracle.h"
#include "dagstack/random_graphs.h"

namespace dagstack {
namespace {

// Minimum twist and minimum stacks over every topological ordering,
// without pruning.
std::pair<int, int> enumerate_all(const DirectedGraph& g) {
  int tn = 1 << 30, sn = 1 << 30;
  for_each_topological_ordering(g, [&](std::span<const VertexId> o) {
    tn = std::min(tn, twist_of_ordering(g, o).size);
    sn = std::min(sn, exact_min_stacks_for_ordering(g, o, 40).num_stacks);
    return true;
  });
  return {tn, sn};
}

TEST(ExactTwist, Examples) {
  EXPECT_EQ(exact_twist_number(gen_path_matching(4)).value, 4);
  EXPECT_EQ(exact_twist_number(gen_three_fence()).value, 3);
  EXPECT_EQ(exact_twist_number(DirectedGraph(5, {{0, 1}, {1, 2}, {2, 3},
                                                 {3, 4}}))
                .value,
            1);
  EXPECT_EQ(exact_twist_number(DirectedGraph(3)).value, 0);
}

TEST(ExactStack, Examples) {
  const DirectedGraph forest(7, {{0, 1}, {0, 2}, {2, 3}, {4, 5}, {6, 5}});
  const auto r = exact_stack_number(forest);
  EXPECT_EQ(r.value, 1);
  EXPECT_TRUE(verify_layout(r.layout).ok());
  EXPECT_EQ(exact_stack_number(gen_three_fence()).value, 3);
  EXPECT_EQ(exact_stack_number(gen_path_matching(3)).value, 3);
}

TEST(ExactOracles, AgreeWithFullEnumeration) {
  Rng rng(29);
  for (int it = 0; it < 40; ++it) {
    const int n = 3 + static_cast<int>(uniform_below(rng, 5));
    const auto g = random_outerplanar_dag(rng, n, 4, 5);
    const auto [tn, sn] = enumerate_all(g);
    const auto rt = exact_twist_number(g);
    const auto rs = exact_stack_number(g);
    EXPECT_EQ(rt.value, g.num_edges() ? tn : 0);
    EXPECT_EQ(rs.value, g.num_edges() ? sn : 0);
    EXPECT_GE(rs.value, rt.value);
    EXPECT_TRUE(is_topological(g, rt.ordering));
    EXPECT_EQ(twist_of_ordering(g, rt.ordering).size, rt.value);
    EXPECT_TRUE(verify_layout(rs.layout).ok());
    EXPECT_EQ(rs.layout.num_stacks, rs.value);
  }
}

TEST(ExactOracles, InvariantUnderRelabelling) {
  Rng rng(31);
  for (int it = 0; it < 20; ++it) {
    const int n = 4 + static_cast<int>(uniform_below(rng, 6));
    const auto g = random_maximal_outerplanar_dag(rng, n);
    const auto perm = random_permutation(rng, n);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back({perm[e.tail], perm[e.head]});
    const DirectedGraph h(n, edges);
    EXPECT_EQ(exact_twist_number(g).value, exact_twist_number(h).value);
    EXPECT_EQ(exact_stack_number(g).value, exact_stack_number(h).value);
  }
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

TEST(ExactOracles, Budget) {
  Rng rng(41);
  const auto big = random_maximal_outerplanar_dag(rng, 40);
  OracleBudget no_time;
  no_time.time_cap_seconds = 0.0;
  EXPECT_EQ(code_of([&] { exact_twist_number(big, no_time); }),
            ErrorCode::kBudgetExceeded);
  EXPECT_EQ(code_of([&] { exact_stack_number(big); }),
            ErrorCode::kBudgetExceeded);
  EXPECT_EQ(code_of([] {
              exact_twist_number(DirectedGraph(3, {{0, 1}, {1, 2}, {2, 0}}));
            }),
            ErrorCode::kCyclicGraph);
}

TEST(LongestMonotone, Examples) {
  const std::vector<long long> a = {3, 1, 2};
  EXPECT_EQ(longest_monotone_subsequence(a, Monotone::kIncreasing),
            (std::vector<int>{1, 2}));
  const std::vector<long long> desc = {9, 7, 5, 3, 1};
  EXPECT_EQ(longest_monotone_subsequence(desc, Monotone::kIncreasing).size(),
            1u);
  EXPECT_EQ(longest_monotone_subsequence(desc, Monotone::kDecreasing).size(),
            5u);
  const std::vector<long long> dup = {1, 2, 2};
  EXPECT_THROW(longest_monotone_subsequence(dup, Monotone::kIncreasing), Error);
}

TEST(LongestMonotone, MatchesQuadraticDp) {
  Rng rng(37);
  for (int it = 0; it < 300; ++it) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 30));
    auto perm = random_permutation(rng, n);
    std::vector<long long> seq(perm.begin(), perm.end());
    for (Monotone mode : {Monotone::kIncreasing, Monotone::kDecreasing}) {
      std::vector<int> best(n, 1);
      int longest = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
          const bool ok = mode == Monotone::kIncreasing ? seq[j] < seq[i]
                                                        : seq[j] > seq[i];
          if (ok) best[i] = std::max(best[i], best[j] + 1);
        }
        longest = std::max(longest, best[i]);
      }
      const auto idx = longest_monotone_subsequence(seq, mode);
      EXPECT_EQ(static_cast<int>(idx.size()), longest);
      for (std::size_t t = 1; t < idx.size(); ++t) {
        EXPECT_LT(idx[t - 1], idx[t]);
        EXPECT_TRUE(mode == Monotone::kIncreasing
                        ? seq[idx[t - 1]] < seq[idx[t]]
                        : seq[idx[t - 1]] > seq[idx[t]]);
      }
    }
  }
}

}  // namespace
}  // namespace dagstack
