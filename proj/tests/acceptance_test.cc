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


// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dagstack/adversary.h"
#include "dagstack/block_cut_tree.h"
#include "dagstack/engine.h"
#include "dagstack/error.h"
#include "dagstack/hpartition.h"
#include "dagstack/layout.h"
#include "dagstack/oracle.h"
#include "dagstack/random_graphs.h"
#include "dagstack/twotree.h"
#include "support.h"

namespace dagstack {
namespace {

// Limits, in seconds unless stated otherwise.
constexpr double kPathMatchingPerInstance = 5.0;
constexpr double kFenceLimit = 30.0;
constexpr double kMonotoneTwistLimit = 300.0;
constexpr int kMonotoneTwistMax = 4;
constexpr double kPartitionLimit = 60.0;
constexpr int kCutCoverMax = 4;
constexpr double kPipelineLimit = 300.0;
constexpr long long kStackCeiling = 24776;
constexpr double kTruncatedOracleLimit = 60.0;
constexpr int kTruncatedTwistMin = 2;

constexpr std::uint64_t kSeed = 20260101;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name,
            const std::function<Outcome()>& run) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("[%s] %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id,
              name.c_str(), o.detail.c_str(), since(t0));
  std::fflush(stdout);
}

std::vector<DirectedGraph> partition_corpus() {
  Rng rng(kSeed + 4);
  std::vector<DirectedGraph> out;
  for (int i = 0; i < 500; ++i) {
    out.push_back(random_maximal_outerplanar_dag(
        rng, 2 + static_cast<int>(uniform_below(rng, 199))));
  }
  return out;
}

Outcome path_matching_family() {
  std::ostringstream d;
  bool ok = true;
  for (int k = 2; k <= 6; ++k) {
    const auto t0 = Clock::now();
    const auto g = gen_path_matching(k);
    const int tn = exact_twist_number(g).value;
    const int sn = exact_stack_number(g).value;
    const double t = since(t0);
    ok = ok && tn == k && sn == k && t < kPathMatchingPerInstance;
    d << "k=" << k << " tn=" << tn << " sn=" << sn << " ";
  }
  return {ok, d.str()};
}

Outcome fence() {
  const auto t0 = Clock::now();
  const auto r = exact_stack_number(gen_three_fence());
  const double t = since(t0);
  const bool ok = r.value >= 3 && r.value == 3 && t < kFenceLimit &&
                  verify_layout(r.layout).ok();
  return {ok, "sn=" + std::to_string(r.value)};
}

Outcome monotone_twist() {
  Rng rng(kSeed + 3);
  const auto t0 = Clock::now();
  int worst = 0;
  for (int i = 0; i < 100; ++i) {
    const auto g = random_monotone_outerplanar_dag(
        rng, 3 + static_cast<int>(uniform_below(rng, 10)));
    worst = std::max(worst, exact_twist_number(g).value);
  }
  return {worst <= kMonotoneTwistMax && since(t0) < kMonotoneTwistLimit,
          "max tn=" + std::to_string(worst) + " over 100 graphs"};
}

Outcome partition_properties(const std::vector<DirectedGraph>& corpus) {
  const auto t0 = Clock::now();
  int bad = 0, worst_cover = 0;
  std::string first;
  for (const auto& g : corpus) {
    const auto seq = build_construction_sequence(g, g.edge(0));
    const auto tree = build_construction_tree(seq, g);
    const auto hp = construct_directed_h_partition(g, seq, tree);
    const auto rep = verify_partition_properties(g, hp, tree);
    worst_cover = std::max(worst_cover, rep.max_cut_cover);
    if (!rep.ok() || rep.max_cut_cover > kCutCoverMax) {
      if (first.empty() && !rep.failures.empty()) first = rep.failures[0];
      ++bad;
    }
  }
  const double t = since(t0);
  return {bad == 0 && t < kPartitionLimit,
          std::to_string(bad) + " failing, max cut cover " +
              std::to_string(worst_cover) + (first.empty() ? "" : "; " + first)};
}

Outcome pipeline() {
  Rng rng(kSeed + 5);
  const auto t0 = Clock::now();
  int bad = 0, worst = 0, worst_n = 0;
  for (int i = 0; i < 500; ++i) {
    const auto g = random_outerplanar_dag(
        rng, 1 + static_cast<int>(uniform_below(rng, 500)));
    const auto r = layout_outerplanar_dag(g);
    if (!verify_layout(r.layout).ok() || r.layout.num_stacks > kStackCeiling) {
      ++bad;
    }
    if (r.layout.num_stacks > worst) {
      worst = r.layout.num_stacks;
      worst_n = g.num_vertices();
    }
  }
  return {bad == 0 && since(t0) < kPipelineLimit,
          std::to_string(bad) + " invalid, empirical max " +
              std::to_string(worst) + " stacks (n=" + std::to_string(worst_n) +
              ") vs ceiling " + std::to_string(kStackCeiling)};
}

Outcome transitive_parts(const std::vector<DirectedGraph>& corpus) {
  int checked = 0, bad = 0;
  for (const auto& g : corpus) {
    const auto seq = build_construction_sequence(g, g.edge(0));
    const auto tree = build_construction_tree(seq, g);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (tree.label[v] != Label::kM) continue;
      const auto l = layout_transitive_part(g, tree, v);
      ++checked;
      if (l.num_stacks > 1 || !verify_layout(l).ok()) ++bad;
    }
  }
  return {bad == 0, std::to_string(checked) + " monotone vertices, " +
                        std::to_string(bad) + " over one stack"};
}

Outcome combine_bound() {
  Rng rng(kSeed + 7);
  int bad = 0, worst_slack = 1 << 30;
  for (int i = 0; i < 100; ++i) {
    const auto g = random_multi_block_dag(
        rng, 2 + static_cast<int>(uniform_below(rng, 15)), 12);
    const auto bct = block_cut_tree(g);
    std::vector<std::optional<Layout>> per(bct.num_blocks());
    int s = 0;
    for (int b = 0; b < bct.num_blocks(); ++b) {
      const auto sub = edge_subgraph(g, bct.blocks[b]);
      const auto prof = monotonicity_profile(sub.graph);
      const Edge base = prof.blocks.at(0).monotone_base.value();
      per[b] = layout_monotone_block(sub.graph, base).layout;
      s = std::max(s, per[b]->num_stacks);
    }
    const auto l = combine_block_layouts(g, bct, per);
    if (!verify_layout(l).ok() || l.num_stacks > 2 * s + 2) ++bad;
    worst_slack = std::min(worst_slack, 2 * s + 2 - l.num_stacks);
  }
  return {bad == 0, std::to_string(bad) + " over 2s+2, smallest slack " +
                        std::to_string(worst_slack)};
}

Outcome davies() {
  const long long d4 = davies_bound(4), d1 = davies_bound(1);
  return {d4 == 64 && d1 == 1,
          "f(4)=" + std::to_string(d4) + " f(1)=" + std::to_string(d1)};
}

Outcome adversary_structure() {
  const auto inst = gen_unbounded_twist(2);
  const auto check = verify_adversary_structure(inst);
  bool ok = check.ok() && inst.graph.num_vertices() == 2114;

  // r_1 for k = 3 recomputed by repeated multiplication.
  const auto r = r_sequence(3);
  BigInt power = 1;
  for (int i = 0; i < 97; ++i) power *= 64;
  ok = ok && r[2] == 1 && r[1] == 32 && r[0] == 2 * power;

  const auto t0 = Clock::now();
  const auto small = gen_unbounded_twist(2, 2);
  const bool small_ok = verify_adversary_structure(small).ok();
  const int tn = exact_twist_number(small.graph).value;
  ok = ok && small_ok && tn >= kTruncatedTwistMin && !small.spec.guarantee &&
       since(t0) < kTruncatedOracleLimit;
  std::ostringstream d;
  d << "n=" << inst.graph.num_vertices()
    << " invariants=" << (check.ok() ? "ok" : check.failures[0])
    << ", r_1(k=3) has " << r[0].str().size() << " digits"
    << ", truncated instance n=" << small.graph.num_vertices()
    << " tn=" << tn << " (twist bound for full k>=3 not reproducible)";
  return {ok, d.str()};
}

Outcome rainbow_suite() {
  Rng rng(kSeed + 10);
  int bad = 0;
  int seen[4] = {0, 0, 0, 0};
  std::string first;
  for (int i = 0; i < 1000; ++i) {
    const int k = 2 + static_cast<int>(uniform_below(rng, 2));
    const auto cfg =
        random_rainbow_config(rng, k, static_cast<int>(uniform_below(rng, 8)));
    const auto res = classify_rainbow_children(cfg.graph, cfg.ordering,
                                               cfg.rainbow, cfg.r, cfg.k);
    const auto why = verify_rainbow_classification(
        cfg.graph, cfg.ordering, cfg.rainbow, cfg.r, cfg.k, res);
    if (!why.empty()) {
      if (first.empty()) first = why;
      ++bad;
    }
    ++seen[static_cast<int>(res.outcome)];
  }
  std::ostringstream d;
  d << bad << " unverified; outcomes twist=" << seen[1]
    << " long-edge=" << seen[2] << " spread=" << seen[3]
    << (first.empty() ? "" : "; " + first);
  return {bad == 0, d.str()};
}

Outcome oracle_consistency() {
  long long graphs = 0;
  int bad = 0;
  for (int n = 3; n <= 8; ++n) {
    for (const auto& g : testing::all_maximal_outerplanar_dags(n)) {
      ++graphs;
      const int tn = exact_twist_number(g).value;
      const int sn = exact_stack_number(g).value;
      const int engine = layout_outerplanar_dag(g).layout.num_stacks;
      if (sn < tn || engine < sn) ++bad;
    }
  }
  return {bad == 0, std::to_string(graphs) + " graphs (n=3..8), " +
                        std::to_string(bad) + " inconsistent"};
}

Outcome erdos_szekeres() {
  Rng rng(kSeed + 12);
  int bad = 0;
  for (int i = 0; i < 10000; ++i) {
    const int k = 1 + static_cast<int>(uniform_below(rng, 10));
    const auto perm = random_permutation(rng, k * k);
    std::vector<long long> seq;
    for (VertexId v : perm) {
      seq.push_back(static_cast<long long>(v) * 7919 -
                    static_cast<long long>(uniform_below(rng, 7919)));
    }
    const auto inc = longest_monotone_subsequence(seq, Monotone::kIncreasing);
    const auto dec = longest_monotone_subsequence(seq, Monotone::kDecreasing);
    if (static_cast<int>(std::max(inc.size(), dec.size())) < k) ++bad;
  }
  return {bad == 0, "10000 sequences, " + std::to_string(bad) + " below k"};
}

}  // namespace
}  // namespace dagstack

int main() {
  using namespace dagstack;
  const auto corpus = partition_corpus();
  report(1, "path-matching family tn = sn = k", path_matching_family);
  report(2, "3-fence exact stack number", fence);
  report(3, "monotone outerplanar twist <= 4", monotone_twist);
  report(4, "H-partition properties", [&] {
    return partition_properties(corpus);
  });
  report(5, "end-to-end layouts within ceiling", pipeline);
  report(6, "transitive parts use one stack", [&] {
    return transitive_parts(corpus);
  });
  report(7, "block combination <= 2s+2", combine_bound);
  report(8, "twist-to-stack bound values", davies);
  report(9, "unbounded-twist construction structure", adversary_structure);
  report(10, "rainbow-with-children classifier", rainbow_suite);
  report(11, "oracle consistency on all small graphs", oracle_consistency);
  report(12, "monotone subsequence bound", erdos_szekeres);
  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
