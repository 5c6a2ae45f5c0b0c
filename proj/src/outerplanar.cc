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

#include "dagstack/outerplanar.h"

#include <algorithm>
#include <iterator>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

#include "dagstack/error.h"

namespace dagstack {
namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

}  // namespace

// A graph is outerplanar iff adding one vertex adjacent to everything keeps
// it planar; in such an embedding the rotation at the added vertex lists the
// original vertices in outer-face order.
OuterplanarityResult is_outerplanar(const DirectedGraph& g) {
  const int n = g.num_vertices();
  OuterplanarityResult result;
  if (n <= 2) {
    result.outerplanar = true;
    for (VertexId v = 0; v < n; ++v) result.outer_order.push_back(v);
    return result;
  }
  const int apex = n;
  BoostGraph bg(n + 1);
  for (const Edge& e : g.edges()) boost::add_edge(e.tail, e.head, bg);
  for (VertexId v = 0; v < n; ++v) boost::add_edge(apex, v, bg);
  auto edge_index = boost::get(boost::edge_index, bg);
  int count = 0;
  boost::graph_traits<BoostGraph>::edge_iterator ei, ei_end;
  for (boost::tie(ei, ei_end) = boost::edges(bg); ei != ei_end; ++ei) {
    boost::put(edge_index, *ei, count++);
  }

  std::vector<std::vector<BoostEdge>> embedding(n + 1);
  std::vector<BoostEdge> kuratowski;
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = &embedding[0],
      boost::boyer_myrvold_params::kuratowski_subgraph =
          std::back_inserter(kuratowski));
  result.outerplanar = planar;
  if (planar) {
    for (const BoostEdge& e : embedding[apex]) {
      int a = static_cast<int>(boost::source(e, bg));
      int b = static_cast<int>(boost::target(e, bg));
      result.outer_order.push_back(a == apex ? b : a);
    }
    return result;
  }
  for (const BoostEdge& e : kuratowski) {
    int a = static_cast<int>(boost::source(e, bg));
    int b = static_cast<int>(boost::target(e, bg));
    if (a == apex || b == apex) continue;
    if (auto id = g.edge_between(a, b)) result.witness.push_back(g.edge(*id));
  }
  std::sort(result.witness.begin(), result.witness.end());
  return result;
}

DirectedGraph augment_to_maximal_outerplanar(const DirectedGraph& g) {
  const int n = g.num_vertices();
  std::vector<VertexId> topo = topological_order(g);
  OuterplanarityResult op = is_outerplanar(g);
  if (!op.outerplanar) {
    throw Error(ErrorCode::kNotOuterplanar, "input is not outerplanar");
  }
  std::vector<int> topo_pos(n);
  for (int i = 0; i < n; ++i) topo_pos[topo[i]] = i;
  auto oriented = [&](VertexId a, VertexId b) {
    return topo_pos[a] < topo_pos[b] ? Edge{a, b} : Edge{b, a};
  };
  if (n <= 1) return g;
  if (n == 2) {
    if (g.num_edges() == 1) return g;
    std::vector<Edge> extra = {oriented(0, 1)};
    return with_added_edges(g, extra);
  }

  // Close the outer cycle; all remaining edges become non-crossing chords.
  const std::vector<VertexId>& cycle = op.outer_order;
  std::vector<Edge> extra;
  for (int i = 0; i < n; ++i) {
    VertexId a = cycle[i], b = cycle[(i + 1) % n];
    if (!g.adjacent(a, b)) extra.push_back(oriented(a, b));
  }
  DirectedGraph polygon = with_added_edges(g, extra);

  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[cycle[i]] = i;
  auto offset = [&](VertexId from, VertexId to) {
    return ((pos[to] - pos[from]) % n + n) % n;
  };
  // Walk every inner face: arriving at v from u, continue to the neighbour of
  // v closest to the chord uv on the inner side.
  std::set<std::pair<VertexId, VertexId>> used;
  std::vector<Edge> fan_edges;
  for (VertexId s = 0; s < n; ++s) {
    for (VertexId t : polygon.neighbors(s)) {
      if (offset(t, s) == 1) continue;  // outer face, traversed backwards
      if (used.count({s, t})) continue;
      std::vector<VertexId> face;
      VertexId u = s, v = t;
      while (true) {
        used.insert({u, v});
        face.push_back(u);
        VertexId best = -1;
        int best_off = -1;
        int limit = offset(v, u);
        for (VertexId w : polygon.neighbors(v)) {
          int off = offset(v, w);
          if (off < limit && off > best_off) {
            best_off = off;
            best = w;
          }
        }
        u = v;
        v = best;
        if (u == s && v == t) break;
      }
      if (face.size() <= 3) continue;
      auto apex_it = std::min_element(face.begin(), face.end());
      int k = static_cast<int>(face.size());
      int a = static_cast<int>(apex_it - face.begin());
      for (int j = 2; j < k - 1; ++j) {
        fan_edges.push_back(oriented(face[a], face[(a + j) % k]));
      }
    }
  }
  DirectedGraph result = with_added_edges(polygon, fan_edges);
  if (result.num_edges() != 2 * n - 3) {
    throw Error(ErrorCode::kInternal,
                "augmentation produced " + std::to_string(result.num_edges()) +
                    " edges for " + std::to_string(n) + " vertices");
  }
  return result;
}

}  // namespace dagstack
