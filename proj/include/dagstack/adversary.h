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


#ifndef DAGSTACK_ADVERSARY_H_
#define DAGSTACK_ADVERSARY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dagstack/graph.h"
#include "dagstack/random_graphs.h"
#include "dagstack/twotree.h"

namespace dagstack {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::int64_t kDefaultVertexCap = 1'000'000;

// r_k = 1 and r_s = 2 (2 r_{s+1})^(1 + r_{s+1} k). Element s-1 holds r_s.
// Throws kSizeExceeded once a term would need more than `max_bits` bits,
// which already happens for k = 4.
std::vector<BigInt> r_sequence(int k, std::int64_t max_bits = 1 << 20);

// Directed path l1..lk r1..rk plus the matching li -> ri. Throws
// kPreconditionViolated for k < 2.
DirectedGraph gen_path_matching(int k);

// The eight-vertex 3-fence. Vertices a1 a2 a3 b1 b2 b3 s t with ids 0..7.
DirectedGraph gen_three_fence();

struct GadgetResult {
  DirectedGraph graph;
  std::vector<Edge> matching;      // a^j -> b^j, j = 1..N
  std::vector<StackingStep> steps;  // in insertion order
};

// Stacks the 2-tree T(ab) of width N onto the edge a->b. New vertices get
// ids n..n+N-1 (b^1..b^N) and n+N..n+2N-1 (a^1..a^N).
// Throws kEdgeMissing, kWrongOrientation, kPreconditionViolated (N < 1).
GadgetResult gen_t_gadget(const DirectedGraph& g, Edge ab, int N);

struct AdversarySpec {
  int k = 0;
  std::vector<BigInt> r;
  BigInt N;                    // gadget width of the guaranteed construction;
                               // 0 when r is too large to compute
  std::optional<int> n_override;
  int width_used = 0;          // the N actually instantiated
  std::vector<std::vector<Edge>> matchings;  // E_0..E_k
  std::vector<int> level_sizes;              // |V(G_0)|..|V(G_k)|
  Edge base{0, 1};
  // False for truncated instances: the twist lower bound is not implied.
  bool guarantee = true;
};

struct AdversaryInstance {
  DirectedGraph graph;
  AdversarySpec spec;
  ConstructionSequence sequence;
};

// Exact vertex count 2 + 2 (N + N^2 + ... + N^k).
BigInt unbounded_twist_vertex_count(int k, const BigInt& N);

// Builds G_0 ⊂ ... ⊂ G_k. Without an override the instance must stay within
// `vertex_cap` vertices, else kSizeExceeded.
AdversaryInstance gen_unbounded_twist(
    int k, std::optional<int> n_override = std::nullopt,
    std::int64_t vertex_cap = kDefaultVertexCap);

struct AdversaryCheck {
  bool two_tree = false;
  bool monotone = false;
  int max_stacked = 0;
  bool matchings_disjoint = false;
  bool matchings_unstacked = false;
  bool level_sizes_match = false;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Re-derives the structure from the graph alone (construction sequence from
// the base, stacking types, per-level subgraphs) and compares it with the recorded parameters.
AdversaryCheck verify_adversary_structure(const AdversaryInstance& inst);

struct RainbowTriple {
  VertexId a = 0;
  VertexId b = 0;
  VertexId c = 0;
};

enum class RainbowOutcome { kTwist = 1, kLongEdge = 2, kSpreadIndices = 3 };

struct RainbowClassification {
  RainbowOutcome outcome = RainbowOutcome::kTwist;
  std::vector<Edge> twist;   // outcome 1
  int index = -1;            // outcome 2, 0-based into the rainbow
  std::vector<int> indices;  // outcome 3, 0-based, ascending
};

// rainbow[i] holds a_{i+1}, b_{i+1} and the right child c_{i+1}. Cases are
// tried in the order: twist among children right of b_n, a child reaching
// past b_{i+r}, every r-th remaining index.
// Throws kPreconditionViolated on malformed input or n < 2k^2.
RainbowClassification classify_rainbow_children(
    const DirectedGraph& g, std::span<const VertexId> ordering,
    std::span<const RainbowTriple> rainbow, int r, int k);

// Checks the witness directly against the ordering. Returns an empty string
// when it holds, else a description of the first defect.
std::string verify_rainbow_classification(
    const DirectedGraph& g, std::span<const VertexId> ordering,
    std::span<const RainbowTriple> rainbow, int r, int k,
    const RainbowClassification& result);

struct RainbowConfig {
  DirectedGraph graph;
  std::vector<VertexId> ordering;
  std::vector<RainbowTriple> rainbow;
  int r = 1;
  int k = 2;
};

// A 2-tree built around an n-rainbow with one right child per rainbow edge,
// n = 2k^2 + extra, r in [1, 4], children placed in a random mix of far
// right, close and far positions.
RainbowConfig random_rainbow_config(Rng& rng, int k, int extra);

}  // namespace dagstack

#endif  // DAGSTACK_ADVERSARY_H_
