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


#ifndef DAGSTACK_TESTS_SUPPORT_H_
#define DAGSTACK_TESTS_SUPPORT_H_

#include <vector>

#include "dagstack/graph.h"

namespace dagstack::testing {

// Outerplanarity decided by searching for K4 or K2,3 minors directly:
// every assignment of vertices to branch sets is tried. Exponential, meant
// for n <= 8.
bool has_k4_or_k23_minor(const DirectedGraph& g);

// Every triangulation of the convex n-gon on corners 0..n-1, as undirected
// edge lists (sides first, then diagonals).
std::vector<std::vector<Edge>> polygon_triangulations(int n);

// One representative per isomorphism class of maximal outerplanar DAGs on n
// vertices, n >= 3. Two such graphs are isomorphic exactly when a symmetry of
// the polygon maps one onto the other, since the outer cycle is the only
// Hamiltonian cycle.
std::vector<DirectedGraph> all_maximal_outerplanar_dags(int n);

}  // namespace dagstack::testing

#endif  // DAGSTACK_TESTS_SUPPORT_H_
