// Copyright 2026 The Armchair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "armchair/graph_core.hpp"

#include <cstdlib>
#include <numeric>
#include <random>
#include <set>

#include "gtest/gtest.h"

#include "armchair/tubulene.hpp"
#include "oracle.hpp"

namespace armchair {
namespace {

using testing::cycle_graph;
using testing::path_graph;

Graph random_connected_graph(std::mt19937& rng, std::size_t count, std::size_t extra) {
  std::set<Edge> edges;
  for (VertexIndex v = 1; v < count; ++v) {
    std::uniform_int_distribution<VertexIndex> pick(0, v - 1);
    edges.emplace(pick(rng), v);
  }
  std::uniform_int_distribution<VertexIndex> any(0, static_cast<VertexIndex>(count - 1));
  for (std::size_t k = 0; k < extra; ++k) {
    VertexIndex a = any(rng), b = any(rng);
    if (a != b) edges.emplace(std::min(a, b), std::max(a, b));
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph(count, list);
}

TEST(Graph, RejectsMalformedInput) {
  std::vector<Edge> loop{{0, 0}, {0, 1}};
  EXPECT_THROW(Graph(2, loop), std::invalid_argument);
  std::vector<Edge> dup{{0, 1}, {1, 0}};
  EXPECT_THROW(Graph(2, dup), std::invalid_argument);
  std::vector<Edge> out_of_range{{0, 5}};
  EXPECT_THROW(Graph(2, out_of_range), std::invalid_argument);
  std::vector<Edge> split{{0, 1}, {2, 3}};
  EXPECT_THROW(Graph(4, split), std::invalid_argument);
}

TEST(Graph, NeighborsAreSortedAndSymmetric) {
  std::vector<Edge> edges{{3, 0}, {0, 1}, {2, 0}};
  Graph g(4, edges);
  auto n0 = g.neighbors(0);
  EXPECT_EQ(std::vector<VertexIndex>(n0.begin(), n0.end()), (std::vector<VertexIndex>{1, 2, 3}));
  EXPECT_TRUE(g.has_edge(3, 0));
  EXPECT_FALSE(g.has_edge(1, 2));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}));
}

TEST(BfsDistances, SixCycle) {
  auto row = bfs_distances(cycle_graph(6), 0);
  EXPECT_EQ(row.source, 0u);
  EXPECT_EQ(row.dist, (std::vector<Distance>{0, 1, 2, 3, 2, 1}));
}

TEST(BfsDistances, UnknownSource) {
  EXPECT_THROW(bfs_distances(cycle_graph(6), 6), std::invalid_argument);
}

TEST(BfsDistances, VertexBelowTopRimIsAtTwoPPlusOne) {
  const auto params = TubuleneParams::make(8, 4);
  const Graph g = build_armchair(params);
  const auto row = bfs_distances(g, encode(params, {0, 0, 0}));
  // v1(p, n-1) is the top-rim vertex straight above v0(0, 0).
  EXPECT_EQ(row.dist[encode(params, {4, 1, 7})], 9u);
  Distance nearest = ~Distance{0};
  for (VertexIndex t : layer_set(params, 4, 1)) nearest = std::min(nearest, row.dist[t]);
  EXPECT_EQ(nearest, 9u);
}

TEST(DistanceSumToSet, Examples) {
  const auto c6 = cycle_graph(6);
  std::vector<VertexIndex> self{3};
  EXPECT_EQ(distance_sum_to_set(c6, 3, self), 0u);

  const auto params = TubuleneParams::make(8, 4);
  const Graph g = build_armchair(params);
  const VertexIndex u = encode(params, {0, 0, 0});
  EXPECT_EQ(distance_sum_to_set(g, u, layer_set(params, 0, 0)), 32u);
  EXPECT_EQ(distance_sum_to_set(g, u, layer_set(params, 4, 1)), 88u);

  const auto p12 = TubuleneParams::make(12, 1);
  const Graph g12 = build_armchair(p12);
  EXPECT_EQ(distance_sum_to_set(g12, encode(p12, {0, 0, 0}), layer_set(p12, 1, 1)), 80u);

  std::vector<VertexIndex> bad{0, 99};
  EXPECT_THROW(distance_sum_to_set(c6, 0, bad), std::invalid_argument);
}

TEST(WienerIndex, SmallGraphs) {
  EXPECT_EQ(wiener_index(path_graph(3)), 4u);
  EXPECT_EQ(wiener_index(cycle_graph(6)), 27u);
  EXPECT_EQ(wiener_index(path_graph(2)), 1u);
  // Even cycle: m^3 / 8.
  EXPECT_EQ(wiener_index(cycle_graph(16)), 512u);
}

TEST(WienerOfSubset, Examples) {
  const auto c6 = cycle_graph(6);
  std::vector<VertexIndex> one{4};
  EXPECT_EQ(wiener_of_subset(c6, one), 0u);

  const auto p8 = TubuleneParams::make(8, 4);
  const Graph g8 = build_armchair(p8);
  auto middle = layer_set(p8, 2, 0);
  auto upper = layer_set(p8, 2, 1);
  middle.insert(middle.end(), upper.begin(), upper.end());
  EXPECT_EQ(wiener_of_subset(g8, middle), 512u);

  const auto p12 = TubuleneParams::make(12, 1);
  const Graph g12 = build_armchair(p12);
  auto orbit = layer_set(p12, 0, 0);
  auto top = layer_set(p12, 1, 1);
  orbit.insert(orbit.end(), top.begin(), top.end());
  EXPECT_EQ(wiener_of_subset(g12, orbit), 1824u);

  std::vector<VertexIndex> bad{1000};
  EXPECT_THROW(wiener_of_subset(c6, bad), std::invalid_argument);
}

TEST(WienerOfSubset, WholeVertexSetIsWienerIndex) {
  const auto params = TubuleneParams::make(6, 4);
  const Graph g = build_armchair(params);
  std::vector<VertexIndex> all(g.vertex_count());
  std::iota(all.begin(), all.end(), VertexIndex{0});
  EXPECT_EQ(wiener_of_subset(g, all), wiener_index(g));
  EXPECT_EQ(wiener_index(g), 9096u);
}

TEST(DistanceTable, ParallelFillMatchesSerial) {
  const Graph g = build_armchair(TubuleneParams::make(10, 3));
  const DistanceTable serial(g, 1), parallel(g, 4);
  for (VertexIndex u = 0; u < g.vertex_count(); ++u) {
    auto a = serial.row(u), b = parallel.row(u);
    ASSERT_TRUE(std::equal(a.begin(), a.end(), b.begin()));
  }
  EXPECT_EQ(wiener_index(serial), wiener_index(g));
}

// Metric properties on random connected graphs and on tubes, with
// Floyd-Warshall as the reference.
TEST(DistanceProperties, RandomGraphs) {
  std::mt19937 rng(20261014);
  std::vector<Graph> graphs;
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<std::size_t> size(2, 40), extra(0, 30);
    graphs.push_back(random_connected_graph(rng, size(rng), extra(rng)));
  }
  graphs.push_back(build_armchair(TubuleneParams::make(6, 3)));
  graphs.push_back(build_armchair(TubuleneParams::make(4, 1)));

  for (const auto& g : graphs) {
    const std::size_t count = g.vertex_count();
    const auto fw = testing::floyd_warshall(count, g.edges());
    const DistanceTable table(g);
    std::vector<VertexIndex> all(count);
    std::iota(all.begin(), all.end(), VertexIndex{0});
    std::uint64_t half_sum = 0;
    for (VertexIndex u = 0; u < count; ++u) {
      half_sum += distance_sum_to_set(g, u, all);
      for (VertexIndex v = 0; v < count; ++v) {
        ASSERT_EQ(table.at(u, v), fw[u][v]);
        ASSERT_EQ(table.at(u, v), table.at(v, u));
      }
      for (const auto& [a, b] : g.edges()) {
        long da = table.at(u, a), db = table.at(u, b);
        ASSERT_LE(std::abs(da - db), 1);
      }
    }
    EXPECT_EQ(wiener_index(g), half_sum / 2);

    std::uniform_int_distribution<VertexIndex> pick(0, static_cast<VertexIndex>(count - 1));
    for (int k = 0; k < 200; ++k) {
      VertexIndex u = pick(rng), v = pick(rng), w = pick(rng);
      ASSERT_LE(table.at(u, w), table.at(u, v) + table.at(v, w));
    }

    // Split V at random into two sets; the pair sum over the union
    // decomposes into the two subset indices plus the cross term.
    std::vector<VertexIndex> s1, s2;
    for (VertexIndex v = 0; v < count; ++v) (rng() % 2 ? s1 : s2).push_back(v);
    std::uint64_t cross = 0;
    for (VertexIndex u : s1) cross += distance_sum_to_set(g, u, s2);
    EXPECT_EQ(wiener_index(g), wiener_of_subset(g, s1) + wiener_of_subset(g, s2) + cross);
  }
}

}  // namespace
}  // namespace armchair
