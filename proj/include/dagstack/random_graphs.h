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

#ifndef DAGSTACK_RANDOM_GRAPHS_H_
#define DAGSTACK_RANDOM_GRAPHS_H_

#include <cstdint>
#include <random>
#include <vector>

#include "dagstack/graph.h"

namespace dagstack {

using Rng = std::mt19937_64;

// Uniform integer in [0, bound) by rejection, identical on every platform.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);
bool coin(Rng& rng, std::uint64_t num, std::uint64_t den);
std::vector<VertexId> random_permutation(Rng& rng, int n);

// Random triangulated polygon, oriented along a random vertex order, with
// randomly relabelled vertices.
DirectedGraph random_maximal_outerplanar_dag(Rng& rng, int n);

// A random maximal outerplanar DAG with each edge kept with probability
// keep_num / keep_den.
DirectedGraph random_outerplanar_dag(Rng& rng, int n, int keep_num = 2,
                                     int keep_den = 3);

// Random 2-tree built from the base edge 0->1 by monotone stackings only, at
// most one vertex per edge (so at most one on the base edge as well).
DirectedGraph random_monotone_outerplanar_dag(Rng& rng, int n);

// Monotone maximal outerplanar blocks and bridges glued at cut vertices.
// Every block has between 2 and max_block_size vertices.
DirectedGraph random_multi_block_dag(Rng& rng, int num_blocks,
                                     int max_block_size);

}  // namespace dagstack

#endif  // DAGSTACK_RANDOM_GRAPHS_H_
