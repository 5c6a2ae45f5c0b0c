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

#ifndef DAGSTACK_OUTERPLANAR_H_
#define DAGSTACK_OUTERPLANAR_H_

#include <vector>

#include "dagstack/graph.h"

namespace dagstack {

struct OuterplanarityResult {
  bool outerplanar = false;
  // When outerplanar: every vertex exactly once, in the cyclic order in which
  // the vertices meet the outer face of some outerplanar drawing. Adding the
  // edges between cyclically consecutive entries keeps the graph outerplanar.
  std::vector<VertexId> outer_order;
  // When not outerplanar: the edges of g lying on a Kuratowski subgraph of
  // g plus one universal vertex. They contain a K4 or K2,3 minor.
  std::vector<Edge> witness;
};

OuterplanarityResult is_outerplanar(const DirectedGraph& g);

// Maximal outerplanar DAG containing g. Added edges are oriented along the
// lexicographically smallest topological ordering of g. Throws
// kNotOuterplanar / kCyclicGraph.
DirectedGraph augment_to_maximal_outerplanar(const DirectedGraph& g);

}  // namespace dagstack

#endif  // DAGSTACK_OUTERPLANAR_H_
