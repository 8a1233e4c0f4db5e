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

#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "armchair/graph_core.hpp"

namespace armchair {

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// AT(n, p): n hexagon columns of p hexagons each.
struct TubuleneParams {
  int n = 0;
  int p = 0;

  static TubuleneParams make(int n, int p) {
    TubuleneParams params{n, p};
    params.validate();
    return params;
  }

  void validate() const {
    if (n < 2) throw ParameterError("n must be at least 2, got " + std::to_string(n));
    if (n % 2 != 0) throw ParameterError("n must be even, got " + std::to_string(n));
    if (p < 1) throw ParameterError("p must be at least 1, got " + std::to_string(p));
  }

  std::size_t vertex_count() const { return 2u * n * (p + 1u); }
  std::size_t edge_count() const { return 3u * n * p + 2u * n; }

  friend bool operator==(const TubuleneParams&, const TubuleneParams&) = default;
};

// v^kind_{layer,index}. Kind 0 lies below kind 1 within a layer.
struct VertexId {
  int layer = 0;
  int kind = 0;
  int index = 0;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

// Layer-major, then kind, then ring index. The ring index is reduced mod n.
inline VertexIndex encode(const TubuleneParams& params, VertexId v) {
  if (v.layer < 0 || v.layer > params.p || (v.kind != 0 && v.kind != 1)) {
    throw std::invalid_argument("vertex coordinate out of range");
  }
  int j = ((v.index % params.n) + params.n) % params.n;
  return static_cast<VertexIndex>(v.layer * 2 * params.n + v.kind * params.n + j);
}

inline VertexId decode(const TubuleneParams& params, VertexIndex id) {
  if (id >= params.vertex_count()) {
    throw std::invalid_argument("unknown vertex id " + std::to_string(id));
  }
  int raw = static_cast<int>(id);
  return VertexId{raw / (2 * params.n), (raw / params.n) % 2, raw % params.n};
}

// Edge families, with q over [0, n/2) and ring indices mod n:
//   v0(i,2q)   - v0(i,2q+1)        v1(i,2q)   - v1(i,2q+1)
//   v1(i,2q)   - v0(i,2q+1)        v1(i,2q+1) - v0(i,2q+2)
//   v1(i,2q)   - v0(i+1,2q+1)      v1(i,2q+1) - v0(i+1,2q+2)   (i < p)
// Even ring positions carry the low columns, odd positions the high ones.
inline std::vector<Edge> armchair_edges(const TubuleneParams& params) {
  params.validate();
  auto id = [&](int i, int k, int j) { return encode(params, {i, k, j}); };
  auto ordered = [](VertexIndex a, VertexIndex b) {
    return a < b ? Edge{a, b} : Edge{b, a};
  };
  std::vector<Edge> edges;
  edges.reserve(params.edge_count());
  for (int i = 0; i <= params.p; ++i) {
    for (int q = 0; q < params.n / 2; ++q) {
      edges.push_back(ordered(id(i, 0, 2 * q), id(i, 0, 2 * q + 1)));
      edges.push_back(ordered(id(i, 1, 2 * q), id(i, 1, 2 * q + 1)));
      edges.push_back(ordered(id(i, 1, 2 * q), id(i, 0, 2 * q + 1)));
      edges.push_back(ordered(id(i, 1, 2 * q + 1), id(i, 0, 2 * q + 2)));
      if (i < params.p) {
        edges.push_back(ordered(id(i, 1, 2 * q), id(i + 1, 0, 2 * q + 1)));
        edges.push_back(ordered(id(i, 1, 2 * q + 1), id(i + 1, 0, 2 * q + 2)));
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

inline Graph build_armchair(const TubuleneParams& params) {
  auto edges = armchair_edges(params);
  return Graph(params.vertex_count(), edges);
}

// The n ids of V^kind_layer, in ring order.
inline std::vector<VertexIndex> layer_set(const TubuleneParams& params, int layer,
                                          int kind) {
  if (layer < 0 || layer > params.p) {
    throw std::invalid_argument("layer out of range: " + std::to_string(layer));
  }
  if (kind != 0 && kind != 1) {
    throw std::invalid_argument("kind must be 0 or 1, got " + std::to_string(kind));
  }
  std::vector<VertexIndex> ids;
  ids.reserve(params.n);
  for (int j = 0; j < params.n; ++j) ids.push_back(encode(params, {layer, kind, j}));
  return ids;
}

enum class RimEnd { bottom, top };

// The rim cycle of layer 0 (bottom) or layer p (top), starting at v0(i,0) and
// walking v0(i,0), v0(i,1), v1(i,0), v1(i,1), v0(i,2), ...
inline std::vector<VertexId> rim_cycle(const TubuleneParams& params, RimEnd end) {
  params.validate();
  const int layer = end == RimEnd::bottom ? 0 : params.p;
  std::vector<VertexId> cycle;
  cycle.reserve(2 * params.n);
  for (int q = 0; q < params.n / 2; ++q) {
    cycle.push_back({layer, 0, 2 * q});
    cycle.push_back({layer, 0, 2 * q + 1});
    cycle.push_back({layer, 1, 2 * q});
    cycle.push_back({layer, 1, 2 * q + 1});
  }
  return cycle;
}

// The n*p hexagonal faces, each listed in cyclic order. Low columns sit
// between V^0_i and V^0_{i+1}; high columns between V^1_i and V^1_{i+1}.
inline std::vector<std::array<VertexIndex, 6>> hexagons(const TubuleneParams& params) {
  params.validate();
  auto id = [&](int i, int k, int j) { return encode(params, {i, k, j}); };
  std::vector<std::array<VertexIndex, 6>> faces;
  faces.reserve(static_cast<std::size_t>(params.n) * params.p);
  for (int i = 0; i < params.p; ++i) {
    for (int q = 0; q < params.n / 2; ++q) {
      faces.push_back({id(i, 0, 2 * q), id(i, 0, 2 * q + 1), id(i, 1, 2 * q),
                       id(i + 1, 0, 2 * q + 1), id(i + 1, 0, 2 * q),
                       id(i, 1, 2 * q - 1)});
      faces.push_back({id(i, 1, 2 * q), id(i, 1, 2 * q + 1), id(i + 1, 0, 2 * q + 2),
                       id(i + 1, 1, 2 * q + 1), id(i + 1, 1, 2 * q),
                       id(i + 1, 0, 2 * q + 1)});
    }
  }
  return faces;
}

}  // namespace armchair
