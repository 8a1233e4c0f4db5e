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

#include "armchair/tubulene.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gtest/gtest.h"

#include "armchair/graph_core.hpp"

namespace armchair {
namespace {

std::vector<std::pair<int, int>> sweep() {
  std::vector<std::pair<int, int>> out;
  for (int n = 2; n <= 16; n += 2) {
    for (int p = 1; p <= 6; ++p) out.emplace_back(n, p);
  }
  return out;
}

TEST(TubuleneParams, Validation) {
  EXPECT_THROW(TubuleneParams::make(5, 1), ParameterError);
  EXPECT_THROW(TubuleneParams::make(0, 1), ParameterError);
  EXPECT_THROW(TubuleneParams::make(4, 0), ParameterError);
  EXPECT_NO_THROW(TubuleneParams::make(2, 1));
}

TEST(VertexId, EncodingIsLayerMajorBijection) {
  const auto params = TubuleneParams::make(6, 4);
  for (VertexIndex id = 0; id < params.vertex_count(); ++id) {
    ASSERT_EQ(encode(params, decode(params, id)), id);
  }
  EXPECT_EQ(encode(params, {1, 1, 2}), 1u * 12 + 6 + 2);
  EXPECT_EQ(encode(params, {0, 0, -1}), 5u);
  EXPECT_THROW(encode(params, {5, 0, 0}), std::invalid_argument);
  EXPECT_THROW(decode(params, 60), std::invalid_argument);
}

TEST(BuildArmchair, SixByFourHasSixtyVertices) {
  const auto g = build_armchair(TubuleneParams::make(6, 4));
  EXPECT_EQ(g.vertex_count(), 60u);
}

TEST(BuildArmchair, TwoByOne) {
  const auto params = TubuleneParams::make(2, 1);
  const auto g = build_armchair(params);
  EXPECT_EQ(g.vertex_count(), 8u);
  EXPECT_EQ(g.edge_count(), 10u);
  int deg2 = 0;
  for (VertexIndex v = 0; v < 8; ++v) deg2 += g.degree(v) == 2;
  EXPECT_EQ(deg2, 4);
}

TEST(BuildArmchair, BottomRimDistancesForNEight) {
  const auto params = TubuleneParams::make(8, 4);
  const auto g = build_armchair(params);
  const auto row = bfs_distances(g, encode(params, {0, 0, 0}));
  std::vector<Distance> rim;
  for (VertexIndex t : layer_set(params, 0, 0)) {
    if (t != encode(params, {0, 0, 0})) rim.push_back(row.dist[t]);
  }
  std::sort(rim.begin(), rim.end());
  EXPECT_EQ(rim, (std::vector<Distance>{1, 3, 4, 4, 5, 7, 8}));
}

TEST(BuildArmchair, CountsAndDegrees) {
  for (auto [n, p] : sweep()) {
    const auto params = TubuleneParams::make(n, p);
    const auto g = build_armchair(params);
    ASSERT_EQ(g.vertex_count(), static_cast<std::size_t>(2 * n * (p + 1)));
    ASSERT_EQ(g.edge_count(), static_cast<std::size_t>(3 * n * p + 2 * n));
    std::size_t degree_sum = 0;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      const VertexId c = decode(params, v);
      const bool rim = (c.layer == 0 && c.kind == 0) || (c.layer == p && c.kind == 1);
      ASSERT_EQ(g.degree(v), rim ? 2u : 3u) << "n=" << n << " p=" << p << " v=" << v;
      degree_sum += g.degree(v);
    }
    EXPECT_EQ(degree_sum, 3 * g.vertex_count() - 2 * n);
  }
}

TEST(BuildArmchair, Bipartite) {
  for (auto [n, p] : sweep()) {
    const auto g = build_armchair(TubuleneParams::make(n, p));
    const auto row = bfs_distances(g, 0);
    for (const auto& [a, b] : g.edges()) {
      ASSERT_NE(row.dist[a] % 2, row.dist[b] % 2) << "n=" << n << " p=" << p;
    }
  }
}

TEST(BuildArmchair, HexagonsAreSixCycles) {
  for (auto [n, p] : sweep()) {
    const auto params = TubuleneParams::make(n, p);
    const auto g = build_armchair(params);
    const auto faces = hexagons(params);
    ASSERT_EQ(faces.size(), static_cast<std::size_t>(n * p));
    std::set<std::vector<VertexIndex>> distinct;
    for (const auto& face : faces) {
      for (std::size_t k = 0; k < 6; ++k) ASSERT_TRUE(g.has_edge(face[k], face[(k + 1) % 6]));
      std::vector<VertexIndex> sorted(face.begin(), face.end());
      std::sort(sorted.begin(), sorted.end());
      ASSERT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
      distinct.insert(sorted);
    }
    EXPECT_EQ(distinct.size(), faces.size());
    // Every edge lies on one or two faces; rim edges exactly on one.
    if (n >= 4) {
      std::map<Edge, int> uses;
      for (const auto& face : faces) {
        for (std::size_t k = 0; k < 6; ++k) {
          auto a = face[k], b = face[(k + 1) % 6];
          uses[{std::min(a, b), std::max(a, b)}]++;
        }
      }
      for (const auto& e : g.edges()) {
        ASSERT_TRUE(uses[e] == 1 || uses[e] == 2);
      }
    }
  }
}

TEST(RimCycle, TwoByOneBottom) {
  const auto params = TubuleneParams::make(2, 1);
  const auto rim = rim_cycle(params, RimEnd::bottom);
  EXPECT_EQ(rim, (std::vector<VertexId>{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}}));
}

TEST(RimCycle, InducedDisjointCycles) {
  for (auto [n, p] : sweep()) {
    const auto params = TubuleneParams::make(n, p);
    const auto g = build_armchair(params);
    std::set<VertexIndex> seen;
    for (RimEnd end : {RimEnd::bottom, RimEnd::top}) {
      const auto rim = rim_cycle(params, end);
      ASSERT_EQ(rim.size(), static_cast<std::size_t>(2 * n));
      std::vector<VertexIndex> ids;
      for (std::size_t t = 0; t < rim.size(); ++t) {
        ids.push_back(encode(params, rim[t]));
        EXPECT_EQ(rim[t].kind, (t % 4) < 2 ? 0 : 1);
      }
      for (VertexIndex id : ids) ASSERT_TRUE(seen.insert(id).second);
      for (std::size_t a = 0; a < ids.size(); ++a) {
        for (std::size_t b = a + 1; b < ids.size(); ++b) {
          const std::size_t gap = std::min(b - a, ids.size() - (b - a));
          ASSERT_EQ(g.has_edge(ids[a], ids[b]), gap == 1) << "n=" << n << " p=" << p;
        }
      }
      const int degree2_kind = end == RimEnd::bottom ? 0 : 1;
      int degree2 = 0;
      for (std::size_t t = 0; t < ids.size(); ++t) {
        if (g.degree(ids[t]) == 2) {
          ++degree2;
          EXPECT_EQ(rim[t].kind, degree2_kind);
        }
      }
      EXPECT_EQ(degree2, n);
    }
  }
}

TEST(LayerSet, Examples) {
  const auto params = TubuleneParams::make(6, 4);
  const auto g = build_armchair(params);
  const auto bottom = layer_set(params, 0, 0);
  ASSERT_EQ(bottom.size(), 6u);
  for (VertexIndex v : bottom) EXPECT_EQ(g.degree(v), 2u);
  for (VertexIndex v : layer_set(params, 4, 0)) EXPECT_EQ(g.degree(v), 3u);

  std::set<VertexIndex> all;
  int sets = 0;
  for (int i = 0; i <= 4; ++i) {
    for (int k = 0; k < 2; ++k) {
      auto s = layer_set(params, i, k);
      ASSERT_EQ(s.size(), 6u);
      all.insert(s.begin(), s.end());
      ++sets;
    }
  }
  EXPECT_EQ(sets, 10);
  EXPECT_EQ(all.size(), 60u);
  EXPECT_THROW(layer_set(params, 5, 0), std::invalid_argument);
  EXPECT_THROW(layer_set(params, 0, 2), std::invalid_argument);
}

TEST(BuildArmchair, ColumnPairRotationIsAutomorphism) {
  for (auto [n, p] : sweep()) {
    const auto params = TubuleneParams::make(n, p);
    const auto g = build_armchair(params);
    auto rotate = [&](VertexIndex v) {
      VertexId c = decode(params, v);
      c.index += 2;
      return encode(params, c);
    };
    for (const auto& [a, b] : g.edges()) ASSERT_TRUE(g.has_edge(rotate(a), rotate(b)));
  }
}

TEST(BuildArmchair, RimSelfDistanceSum) {
  for (int n = 4; n <= 20; n += 2) {
    const auto params = TubuleneParams::make(n, 2);
    const auto g = build_armchair(params);
    const auto rim = layer_set(params, 0, 0);
    const std::uint64_t expected = n % 4 == 0 ? n * n / 2 : (n * n - 2) / 2;
    for (VertexIndex u : rim) ASSERT_EQ(distance_sum_to_set(g, u, rim), expected) << n;
  }
}

}  // namespace
}  // namespace armchair
