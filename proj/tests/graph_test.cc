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
#include <set>

#include "dagstack/adversary.h"
#include "dagstack/block_cut_tree.h"
#include "dagstack/error.h"
#include "dagstack/graph.h"
#include "dagstack/outerplanar.h"
#include "dagstack/random_graphs.h"
#include "dagstack/twotree.h"
#include "support.h"

namespace dagstack {
namespace {

DirectedGraph k4() {
  return DirectedGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

TEST(DirectedGraph, RejectsLoopsAndParallels) {
  EXPECT_THROW(DirectedGraph(2, {{0, 0}}), Error);
  EXPECT_THROW(DirectedGraph(2, {{0, 1}, {0, 1}}), Error);
  EXPECT_THROW(DirectedGraph(2, {{0, 1}, {1, 0}}), Error);
  EXPECT_THROW(DirectedGraph(2, {{0, 2}}), Error);
}

TEST(DirectedGraph, EdgeIdsFollowSortedOrder) {
  DirectedGraph g(3, {{2, 1}, {0, 2}, {0, 1}});
  ASSERT_EQ(g.num_edges(), 3);
  EXPECT_EQ(g.edge(0), (Edge{0, 1}));
  EXPECT_EQ(g.edge(2), (Edge{2, 1}));
  EXPECT_EQ(g.edge_between(1, 2), g.edge_id(2, 1));
  EXPECT_FALSE(g.edge_id(1, 2).has_value());
}

TEST(Acyclic, Examples) {
  EXPECT_TRUE(is_acyclic(gen_path_matching(3)));
  EXPECT_FALSE(is_acyclic(DirectedGraph(3, {{0, 1}, {1, 2}, {2, 0}})));
  EXPECT_TRUE(is_acyclic(DirectedGraph(2, {{0, 1}})));
  EXPECT_THROW(topological_order(DirectedGraph(3, {{0, 1}, {1, 2}, {2, 0}})),
               Error);
}

TEST(TopologicalOrderings, Examples) {
  for (int k = 2; k <= 5; ++k) {
    auto all = enumerate_topological_orderings(gen_path_matching(k), 100);
    ASSERT_EQ(all.size(), 1u);
    for (int i = 0; i < 2 * k; ++i) EXPECT_EQ(all[0][i], i);
  }
  EXPECT_EQ(enumerate_topological_orderings(DirectedGraph(3), 100).size(),
            6u);
  auto one = enumerate_topological_orderings(DirectedGraph(2, {{1, 0}}), 10);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], (std::vector<VertexId>{1, 0}));
}

TEST(TopologicalOrderings, AllAreTopologicalAndDistinct) {
  Rng rng(11);
  for (int it = 0; it < 20; ++it) {
    const auto g = random_outerplanar_dag(rng, 7);
    std::set<std::vector<VertexId>> seen;
    for_each_topological_ordering(g, [&](std::span<const VertexId> o) {
      EXPECT_TRUE(is_topological(g, o));
      seen.emplace(o.begin(), o.end());
      return true;
    });
    // Count linear extensions independently by trying all permutations.
    std::vector<VertexId> perm(7);
    for (int i = 0; i < 7; ++i) perm[i] = i;
    std::size_t brute = 0;
    do {
      if (is_topological(g, perm)) ++brute;
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(seen.size(), brute);
  }
}

TEST(BlockCutTree, TreeHasOneBlockPerEdge) {
  DirectedGraph g(5, {{0, 1}, {0, 2}, {2, 3}, {2, 4}});
  auto bct = block_cut_tree(g);
  EXPECT_EQ(bct.num_blocks(), 4);
  for (const auto& b : bct.blocks) EXPECT_EQ(b.size(), 1u);
  EXPECT_EQ(bct.cut_vertices, (std::vector<VertexId>{0, 2}));
}

TEST(BlockCutTree, CycleIsOneBlock) {
  DirectedGraph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  auto bct = block_cut_tree(g);
  EXPECT_EQ(bct.num_blocks(), 1);
  EXPECT_TRUE(bct.cut_vertices.empty());
  EXPECT_TRUE(bct.tree_edges.empty());
}

TEST(BlockCutTree, TwoTrianglesAndAPendantEdge) {
  // Triangles {0,1,2} and {2,3,4} share 2; edge 4->5 hangs off 4.
  DirectedGraph g(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 5}});
  auto bct = block_cut_tree(g);
  EXPECT_EQ(bct.num_blocks(), 3);
  EXPECT_EQ(bct.cut_vertices, (std::vector<VertexId>{2, 4}));
  EXPECT_EQ(bct.tree_edges.size(), 4u);
  // (B, v) is a tree edge iff v is a cut vertex in B.
  for (const auto& [b, v] : bct.tree_edges) {
    const auto& vs = bct.block_vertices[b];
    EXPECT_TRUE(std::binary_search(vs.begin(), vs.end(), v));
  }
  std::vector<int> covered(g.num_edges(), 0);
  for (const auto& b : bct.blocks) {
    for (int e : b) ++covered[e];
  }
  for (int c : covered) EXPECT_EQ(c, 1);
}

TEST(BlockCutTree, RejectsDisconnected) {
  EXPECT_THROW(block_cut_tree(DirectedGraph(4, {{0, 1}, {2, 3}})), Error);
}

TEST(Outerplanar, Examples) {
  EXPECT_TRUE(is_outerplanar(gen_three_fence()).outerplanar);
  EXPECT_FALSE(is_outerplanar(k4()).outerplanar);
  EXPECT_FALSE(is_outerplanar(gen_path_matching(3)).outerplanar);
  EXPECT_TRUE(is_outerplanar(gen_path_matching(2)).outerplanar);
}

TEST(Outerplanar, WitnessContainsForbiddenMinor) {
  auto r = is_outerplanar(gen_path_matching(3));
  ASSERT_FALSE(r.outerplanar);
  DirectedGraph w(6, r.witness);
  EXPECT_TRUE(testing::has_k4_or_k23_minor(w));
}

TEST(Outerplanar, AgreesWithMinorSearch) {
  Rng rng(3);
  int yes = 0, no = 0;
  for (int it = 0; it < 150; ++it) {
    const int n = 4 + static_cast<int>(uniform_below(rng, 4));
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng, 1, 2)) edges.push_back({u, v});
      }
    }
    DirectedGraph g(n, edges);
    const auto r = is_outerplanar(g);
    EXPECT_EQ(r.outerplanar, !testing::has_k4_or_k23_minor(g));
    (r.outerplanar ? yes : no)++;
    if (r.outerplanar) {
      // Consecutive outer-order vertices can be joined without harm.
      ASSERT_EQ(static_cast<int>(r.outer_order.size()), n);
    }
  }
  EXPECT_GT(yes, 10);
  EXPECT_GT(no, 10);
}

TEST(Augment, Examples) {
  const auto g = gen_three_fence();
  EXPECT_EQ(augment_to_maximal_outerplanar(g), g);
  const DirectedGraph path(4, {{0, 1}, {1, 2}, {2, 3}});
  const auto a = augment_to_maximal_outerplanar(path);
  EXPECT_EQ(a.num_edges(), 5);
  EXPECT_TRUE(is_acyclic(a));
  const DirectedGraph edge(2, {{0, 1}});
  EXPECT_EQ(augment_to_maximal_outerplanar(edge), edge);
  EXPECT_THROW(augment_to_maximal_outerplanar(k4()), Error);
}

TEST(Augment, ProducesMaximalOuterplanarSupergraph) {
  Rng rng(5);
  for (int it = 0; it < 100; ++it) {
    const int n = 3 + static_cast<int>(uniform_below(rng, 40));
    const auto g = random_outerplanar_dag(rng, n);
    if (!is_connected(g)) continue;
    const auto a = augment_to_maximal_outerplanar(g);
    EXPECT_EQ(a.num_edges(), 2 * n - 3);
    EXPECT_TRUE(is_acyclic(a));
    EXPECT_TRUE(is_outerplanar(a).outerplanar);
    for (const Edge& e : g.edges()) EXPECT_TRUE(a.has_edge(e.tail, e.head));
    auto seq = build_construction_sequence(a, a.edge(0));
    EXPECT_TRUE(is_maximal_outerplanar_sequence(seq, a));
  }
}

}  // namespace
}  // namespace dagstack
