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


#include "dagstack/adversary.h"

#include <algorithm>
#include <set>
#include <tuple>

#include "dagstack/error.h"
#include "dagstack/layout.h"
#include "dagstack/oracle.h"

namespace dagstack {

namespace {

[[noreturn]] void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

std::string edge_str(Edge e) {
  return std::to_string(e.tail) + "->" + std::to_string(e.head);
}

// Appends T(ab) to an edge list over vertices 0..n-1 and returns the
// matching. `n` is advanced by 2N.
std::vector<Edge> append_gadget(int& n, std::vector<Edge>& edges,
                                std::vector<StackingStep>& steps, Edge ab,
                                int N) {
  const VertexId a = ab.tail;
  const int first_b = n;
  const int first_a = n + N;
  std::vector<Edge> matching;
  matching.reserve(N);
  VertexId prev_b = ab.head;
  for (int j = 0; j < N; ++j) {
    const VertexId bj = first_b + j;
    const VertexId aj = first_a + j;
    edges.push_back({a, bj});
    edges.push_back({prev_b, bj});
    steps.push_back({bj, Edge{a, prev_b}, StackingType::kMonotoneRight});
    edges.push_back({aj, a});
    edges.push_back({aj, bj});
    steps.push_back({aj, Edge{a, bj}, StackingType::kMonotoneLeft});
    matching.push_back({aj, bj});
    prev_b = bj;
  }
  n += 2 * N;
  return matching;
}

}  // namespace

std::vector<BigInt> r_sequence(int k, std::int64_t max_bits) {
  if (k < 1) fail(ErrorCode::kPreconditionViolated, "k must be at least 1");
  std::vector<BigInt> r(k);
  r[k - 1] = 1;
  for (int s = k - 2; s >= 0; --s) {
    const BigInt& next = r[s + 1];
    const BigInt exponent = 1 + next * k;
    const BigInt base = 2 * next;
    const std::int64_t base_bits =
        static_cast<std::int64_t>(boost::multiprecision::msb(base)) + 1;
    if (exponent > max_bits || exponent * base_bits + 1 > max_bits) {
      fail(ErrorCode::kSizeExceeded,
           "r_" + std::to_string(s + 1) + " needs more than " +
               std::to_string(max_bits) + " bits");
    }
    r[s] = 2 * boost::multiprecision::pow(base,
                                           static_cast<unsigned>(exponent));
  }
  return r;
}

DirectedGraph gen_path_matching(int k) {
  if (k < 2) fail(ErrorCode::kPreconditionViolated, "k must be at least 2");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < 2 * k; ++i) edges.push_back({i, i + 1});
  for (int i = 0; i < k; ++i) edges.push_back({i, k + i});
  std::vector<std::string> names;
  for (int i = 1; i <= k; ++i) names.push_back("l" + std::to_string(i));
  for (int i = 1; i <= k; ++i) names.push_back("r" + std::to_string(i));
  return DirectedGraph(2 * k, std::move(edges), std::move(names));
}

DirectedGraph gen_three_fence() {
  enum { a1, a2, a3, b1, b2, b3, s, t };
  std::vector<Edge> edges = {
      {a1, a2}, {a2, a3}, {b1, b2}, {b2, b3},  // the two chains
      {a1, b1}, {a2, b2}, {a3, b3},            // posts
      {a2, b1}, {a3, b2},                      // zigzag
      {s, a3},  {s, b3},  {a1, t},  {b1, t},
  };
  return DirectedGraph(8, std::move(edges),
                       {"a1", "a2", "a3", "b1", "b2", "b3", "s", "t"});
}

GadgetResult gen_t_gadget(const DirectedGraph& g, Edge ab, int N) {
  if (N < 1) fail(ErrorCode::kPreconditionViolated, "N must be at least 1");
  if (!g.has_edge(ab.tail, ab.head)) {
    if (ab.tail >= 0 && ab.head >= 0 && ab.tail < g.num_vertices() &&
        ab.head < g.num_vertices() && g.has_edge(ab.head, ab.tail)) {
      fail(ErrorCode::kWrongOrientation,
           "edge " + edge_str(ab) + " is oriented the other way");
    }
    fail(ErrorCode::kEdgeMissing, "edge " + edge_str(ab) + " not in graph");
  }
  int n = g.num_vertices();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  GadgetResult out;
  out.matching = append_gadget(n, edges, out.steps, ab, N);
  out.graph = DirectedGraph(n, std::move(edges));
  return out;
}

BigInt unbounded_twist_vertex_count(int k, const BigInt& N) {
  BigInt total = 2;
  BigInt power = 1;
  for (int s = 1; s <= k; ++s) {
    power *= N;
    total += 2 * power;
  }
  return total;
}

AdversaryInstance gen_unbounded_twist(int k, std::optional<int> n_override,
                                      std::int64_t vertex_cap) {
  if (k < 1) fail(ErrorCode::kPreconditionViolated, "k must be at least 1");
  if (n_override && *n_override < 1) {
    fail(ErrorCode::kPreconditionViolated, "n_override must be at least 1");
  }
  AdversaryInstance inst;
  AdversarySpec& spec = inst.spec;
  spec.k = k;
  spec.n_override = n_override;
  if (n_override) {
    try {
      spec.r = r_sequence(k);
      spec.N = spec.r[0] * k;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSizeExceeded) throw;
    }
  } else {
    spec.r = r_sequence(k);
    spec.N = spec.r[0] * k;
    const BigInt count = unbounded_twist_vertex_count(k, spec.N);
    if (count > vertex_cap) {
      std::string digits = count.str();
      if (digits.size() > 24) {
        digits = "a " + std::to_string(digits.size()) + "-digit number of";
      }
      fail(ErrorCode::kSizeExceeded,
           "instance needs " + digits + " vertices, cap is " +
               std::to_string(vertex_cap));
    }
  }
  spec.width_used = n_override ? *n_override : static_cast<int>(spec.N);
  spec.guarantee = !n_override.has_value() ||
                   (!spec.r.empty() && BigInt(*n_override) >= spec.N);

  int n = 2;
  std::vector<Edge> edges = {{0, 1}};
  inst.sequence.base = {0, 1};
  spec.base = {0, 1};
  spec.matchings.push_back({{0, 1}});
  spec.level_sizes.push_back(2);
  for (int s = 0; s < k; ++s) {
    std::vector<Edge> next;
    for (const Edge& ab : spec.matchings[s]) {
      auto m = append_gadget(n, edges, inst.sequence.steps, ab,
                             spec.width_used);
      next.insert(next.end(), m.begin(), m.end());
    }
    spec.matchings.push_back(std::move(next));
    spec.level_sizes.push_back(n);
  }
  inst.graph = DirectedGraph(n, std::move(edges));
  return inst;
}

AdversaryCheck verify_adversary_structure(const AdversaryInstance& inst) {
  AdversaryCheck out;
  const DirectedGraph& g = inst.graph;
  const AdversarySpec& spec = inst.spec;
  auto note = [&](const std::string& s) { out.failures.push_back(s); };

  ConstructionSequence seq;
  try {
    seq = build_construction_sequence(g, spec.base);
    out.two_tree = true;
  } catch (const Error& e) {
    note(std::string("not a 2-tree from the base: ") + e.what());
    return out;
  }
  out.monotone = std::all_of(seq.steps.begin(), seq.steps.end(),
                             [](const StackingStep& st) {
                               return is_monotone(st.type);
                             });
  if (!out.monotone) note("a vertex is stacked non-monotonically");
  const auto counts = stacked_counts(seq, g);
  out.max_stacked = counts.empty() ? 0
                                   : *std::max_element(counts.begin(),
                                                       counts.end());
  if (out.max_stacked > 2) note("an edge carries more than two children");

  std::set<Edge> seen;
  out.matchings_disjoint = true;
  for (const auto& m : spec.matchings) {
    for (const Edge& e : m) {
      if (!g.has_edge(e.tail, e.head)) note("matching edge " + edge_str(e) +
                                            " missing");
      if (!seen.insert(e).second) out.matchings_disjoint = false;
    }
  }
  if (!out.matchings_disjoint) note("matchings are not pairwise disjoint");

  out.level_sizes_match =
      static_cast<int>(spec.level_sizes.size()) == spec.k + 1 &&
      static_cast<int>(spec.matchings.size()) == spec.k + 1 &&
      !spec.level_sizes.empty() &&
      spec.level_sizes.back() == g.num_vertices();
  if (out.level_sizes_match) {
    const BigInt w = spec.width_used;
    for (int s = 0; s <= spec.k; ++s) {
      if (BigInt(spec.level_sizes[s]) !=
              unbounded_twist_vertex_count(s, w) ||
          BigInt(spec.matchings[s].size()) !=
              boost::multiprecision::pow(w, static_cast<unsigned>(s))) {
        out.level_sizes_match = false;
      }
    }
  }
  if (!out.level_sizes_match) note("level sizes disagree with the width");

  out.matchings_unstacked = out.level_sizes_match;
  for (int s = 0; out.level_sizes_match && s <= spec.k; ++s) {
    std::vector<VertexId> prefix(spec.level_sizes[s]);
    for (int v = 0; v < spec.level_sizes[s]; ++v) prefix[v] = v;
    const Subgraph sub = induced_subgraph(g, prefix);
    ConstructionSequence level_seq;
    try {
      level_seq = build_construction_sequence(sub.graph, spec.base);
    } catch (const Error& e) {
      out.matchings_unstacked = false;
      note("G_" + std::to_string(s) + " is not a 2-tree: " + e.what());
      continue;
    }
    const auto level_counts = stacked_counts(level_seq, sub.graph);
    for (const Edge& e : spec.matchings[s]) {
      auto id = sub.graph.edge_id(e.tail, e.head);
      if (!id || level_counts[*id] != 0) {
        out.matchings_unstacked = false;
        note("in G_" + std::to_string(s) + " a vertex is stacked onto " +
             edge_str(e));
        break;
      }
    }
  }
  return out;
}

namespace {

std::vector<int> checked_positions(const DirectedGraph& g,
                                   std::span<const VertexId> ordering) {
  try {
    return positions_of(ordering, g.num_vertices());
  } catch (const Error& e) {
    fail(ErrorCode::kPreconditionViolated, e.what());
  }
}

void check_rainbow(const DirectedGraph& g, std::span<const int> pos,
                   std::span<const RainbowTriple> rainbow, int r, int k) {
  const int n = static_cast<int>(rainbow.size());
  if (k < 1 || r < 1) {
    fail(ErrorCode::kPreconditionViolated, "k and r must be positive");
  }
  if (n < 2 * k * k) {
    fail(ErrorCode::kPreconditionViolated,
         "rainbow of size " + std::to_string(n) + " is below 2k^2");
  }
  std::set<VertexId> used;
  for (int i = 0; i < n; ++i) {
    const auto& t = rainbow[i];
    for (VertexId v : {t.a, t.b, t.c}) {
      if (v < 0 || v >= g.num_vertices() || !used.insert(v).second) {
        fail(ErrorCode::kPreconditionViolated,
             "rainbow vertices must be distinct graph vertices");
      }
    }
    if (!g.has_edge(t.a, t.b) || !g.has_edge(t.a, t.c) ||
        !g.has_edge(t.b, t.c)) {
      fail(ErrorCode::kPreconditionViolated,
           "c_" + std::to_string(i + 1) + " is not a right child of a_" +
               std::to_string(i + 1) + "b_" + std::to_string(i + 1));
    }
    if (i > 0 && !(pos[t.a] < pos[rainbow[i - 1].a] &&
                   pos[t.b] > pos[rainbow[i - 1].b])) {
      fail(ErrorCode::kPreconditionViolated,
           "rainbow is not nested at index " + std::to_string(i + 1));
    }
  }
  if (!(pos[rainbow[0].a] < pos[rainbow[0].b])) {
    fail(ErrorCode::kPreconditionViolated, "a_1 must precede b_1");
  }
}

}  // namespace

RainbowClassification classify_rainbow_children(
    const DirectedGraph& g, std::span<const VertexId> ordering,
    std::span<const RainbowTriple> rainbow, int r, int k) {
  const auto pos = checked_positions(g, ordering);
  check_rainbow(g, pos, rainbow, r, k);
  const int n = static_cast<int>(rainbow.size());
  const int bn = pos[rainbow[n - 1].b];

  std::vector<int> far;
  std::vector<int> near;
  for (int i = 0; i < n; ++i) {
    (pos[rainbow[i].c] > bn ? far : near).push_back(i);
  }
  RainbowClassification out;
  if (static_cast<int>(far.size()) >= k * k) {
    std::sort(far.begin(), far.end(), [&](int x, int y) {
      return pos[rainbow[x].c] < pos[rainbow[y].c];
    });
    std::vector<long long> seq(far.begin(), far.end());
    auto inc = longest_monotone_subsequence(seq, Monotone::kIncreasing);
    out.outcome = RainbowOutcome::kTwist;
    if (static_cast<int>(inc.size()) >= k) {
      for (int j = 0; j < k; ++j) {
        const auto& t = rainbow[far[inc[j]]];
        out.twist.push_back({t.b, t.c});
      }
      return out;
    }
    auto dec = longest_monotone_subsequence(seq, Monotone::kDecreasing);
    if (static_cast<int>(dec.size()) < k) {
      fail(ErrorCode::kInternal, "no monotone subsequence of length k");
    }
    for (int j = 0; j < k; ++j) {
      const auto& t = rainbow[far[dec[j]]];
      out.twist.push_back({t.a, t.c});
    }
    return out;
  }

  for (int i = 0; i + r <= n - 1; ++i) {
    const int pc = pos[rainbow[i].c];
    if (pos[rainbow[i + r].b] < pc && pc < bn) {
      out.outcome = RainbowOutcome::kLongEdge;
      out.index = i;
      return out;
    }
  }

  out.outcome = RainbowOutcome::kSpreadIndices;
  for (std::size_t j = 0; j < near.size(); j += r) {
    out.indices.push_back(near[j]);
  }
  return out;
}

std::string verify_rainbow_classification(
    const DirectedGraph& g, std::span<const VertexId> ordering,
    std::span<const RainbowTriple> rainbow, int r, int k,
    const RainbowClassification& result) {
  std::vector<int> pos;
  try {
    pos = checked_positions(g, ordering);
    check_rainbow(g, pos, rainbow, r, k);
  } catch (const Error& e) {
    return e.what();
  }
  const int n = static_cast<int>(rainbow.size());
  switch (result.outcome) {
    case RainbowOutcome::kTwist: {
      if (static_cast<int>(result.twist.size()) != k) {
        return "twist has the wrong size";
      }
      for (const Edge& e : result.twist) {
        if (!g.has_edge(e.tail, e.head)) return "twist edge not in graph";
      }
      for (int x = 0; x < k; ++x) {
        for (int y = x + 1; y < k; ++y) {
          if (!edges_cross(result.twist[x], result.twist[y], pos)) {
            return "twist edges " + edge_str(result.twist[x]) + " and " +
                   edge_str(result.twist[y]) + " do not cross";
          }
        }
      }
      return {};
    }
    case RainbowOutcome::kLongEdge: {
      const int i = result.index;
      if (i < 0 || i + r > n - 1) return "index out of range";
      const auto& t = rainbow[i];
      const Edge e{t.a, t.c};
      if (!(pos[rainbow[i + r].b] < pos[t.c] &&
            pos[t.c] < pos[rainbow[n - 1].b])) {
        return "child is not between b_{i+r} and b_n";
      }
      if (!(pos[rainbow[n - 1].a] <= pos[t.a] &&
            pos[t.a] <= pos[rainbow[0].a] && pos[t.c] > pos[rainbow[0].b])) {
        return "edge is not nested between the outer and inner rainbow edge";
      }
      int crossings = 0;
      for (const auto& u : rainbow) {
        if (edges_cross(e, Edge{u.a, u.b}, pos)) ++crossings;
      }
      if (crossings < r) return "edge crosses fewer than r rainbow edges";
      return {};
    }
    case RainbowOutcome::kSpreadIndices: {
      const auto& I = result.indices;
      if (static_cast<long long>(I.size()) * 2 * r <= n) {
        return "index set is not larger than n/(2r)";
      }
      for (std::size_t x = 0; x < I.size(); ++x) {
        if (I[x] < 0 || I[x] >= n || (x > 0 && I[x] <= I[x - 1])) {
          return "indices must be ascending and in range";
        }
      }
      for (std::size_t x = 0; x < I.size(); ++x) {
        for (std::size_t y = x + 1; y < I.size(); ++y) {
          const auto& s = rainbow[I[x]];
          const auto& t = rainbow[I[y]];
          for (Edge e : {Edge{s.a, s.c}, Edge{s.b, s.c}}) {
            for (Edge f : {Edge{t.a, t.c}, Edge{t.b, t.c}}) {
              if (edges_cross(e, f, pos)) {
                return "children edges of indices " + std::to_string(I[x]) +
                       " and " + std::to_string(I[y]) + " cross";
              }
            }
          }
        }
      }
      return {};
    }
  }
  return "unknown outcome";
}

RainbowConfig random_rainbow_config(Rng& rng, int k, int extra) {
  RainbowConfig cfg;
  cfg.k = k;
  cfg.r = 1 + static_cast<int>(uniform_below(rng, 4));
  const int n = 2 * k * k + extra;
  const int r = cfg.r;
  auto A = [](int i) { return i; };
  auto B = [n](int i) { return n + i; };
  auto C = [n](int i) { return 2 * n + i; };

  std::vector<Edge> edges = {{A(0), B(0)}};
  for (int i = 0; i + 1 < n; ++i) {
    edges.push_back({A(i + 1), A(i)});
    edges.push_back({A(i + 1), B(i)});
    edges.push_back({A(i + 1), B(i + 1)});
    edges.push_back({B(i), B(i + 1)});
  }
  for (int i = 0; i < n; ++i) {
    edges.push_back({A(i), C(i)});
    edges.push_back({B(i), C(i)});
  }

  // Each child goes into the gap right after b_g.
  const int style = static_cast<int>(uniform_below(rng, 3));
  std::vector<std::tuple<int, int, std::uint64_t, VertexId>> keys;
  for (int i = 0; i < n; ++i) keys.emplace_back(i, 0, 0, B(i));
  for (int i = 0; i < n; ++i) {
    const int close_hi = std::min(i + r, n - 1) - 1;
    const int far_lo = i + r;
    int g = n - 1;
    const std::uint64_t roll = uniform_below(rng, 100);
    const bool to_end = style == 0   ? roll < 70
                        : style == 1 ? roll < 5
                                     : roll < 10;
    const bool to_far = style == 1 && roll >= 5 && roll < 10;
    if (to_end || close_hi < i) {
      g = n - 1;
    } else if (to_far && far_lo <= n - 2) {
      g = far_lo + static_cast<int>(uniform_below(rng, n - 1 - far_lo));
    } else {
      g = i + static_cast<int>(uniform_below(rng, close_hi - i + 1));
    }
    keys.emplace_back(g, 1, rng(), C(i));
  }
  std::sort(keys.begin(), keys.end());

  std::vector<VertexId> order;
  for (int i = n - 1; i >= 0; --i) order.push_back(A(i));
  for (const auto& key : keys) order.push_back(std::get<3>(key));

  const auto relabel = random_permutation(rng, 3 * n);
  for (Edge& e : edges) e = {relabel[e.tail], relabel[e.head]};
  for (VertexId& v : order) v = relabel[v];
  cfg.graph = DirectedGraph(3 * n, std::move(edges));
  cfg.ordering = std::move(order);
  for (int i = 0; i < n; ++i) {
    cfg.rainbow.push_back({relabel[A(i)], relabel[B(i)], relabel[C(i)]});
  }
  return cfg;
}

}  // namespace dagstack
