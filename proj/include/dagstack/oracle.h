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

#ifndef DAGSTACK_ORACLE_H_
#define DAGSTACK_ORACLE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "dagstack/graph.h"
#include "dagstack/layout.h"

namespace dagstack {

struct OracleBudget {
  std::int64_t max_orderings = 10'000'000;  // complete orderings examined
  int max_edges_for_coloring = 40;
  double time_cap_seconds = 120.0;
};

struct OracleResult {
  int value = 0;
  std::vector<VertexId> ordering;  // lexicographically smallest optimum
  Layout layout;                   // filled by exact_stack_number only
  std::int64_t orderings_examined = 0;
  std::int64_t nodes = 0;
};

// Minimum twist over all topological orderings. Throws kBudgetExceeded,
// kCyclicGraph.
OracleResult exact_twist_number(const DirectedGraph& g,
                                const OracleBudget& budget = {});

// Minimum number of stacks over all topological orderings. Throws
// kBudgetExceeded (also when the graph has too many edges to colour).
OracleResult exact_stack_number(const DirectedGraph& g,
                                const OracleBudget& budget = {});

enum class Monotone { kIncreasing, kDecreasing };

// Indices of a longest strictly monotone subsequence. Throws
// kDuplicateValues.
std::vector<int> longest_monotone_subsequence(std::span<const long long> seq,
                                              Monotone mode);

}  // namespace dagstack

#endif  // DAGSTACK_ORACLE_H_
