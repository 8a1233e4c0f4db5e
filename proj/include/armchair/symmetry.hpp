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
#include <compare>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "armchair/graph_core.hpp"
#include "armchair/tubulene.hpp"

namespace armchair {

class ExtensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when the brute-force oracle is asked for a graph above its cap.
class OracleRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A vertex permutation stored as a dense image array.
class Automorphism {
 public:
  Automorphism() = default;
  explicit Automorphism(std::vector<VertexIndex> image) : image_(std::move(image)) {}

  static Automorphism identity(std::size_t vertex_count) {
    std::vector<VertexIndex> image(vertex_count);
    std::iota(image.begin(), image.end(), VertexIndex{0});
    return Automorphism(std::move(image));
  }

  std::size_t size() const { return image_.size(); }
  VertexIndex operator()(VertexIndex v) const { return image_.at(v); }
  std::span<const VertexIndex> images() const { return image_; }

  // (a * b)(v) = a(b(v)).
  friend Automorphism operator*(const Automorphism& a, const Automorphism& b) {
    if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different size");
    std::vector<VertexIndex> image(b.size());
    for (std::size_t v = 0; v < b.size(); ++v) image[v] = a.image_[b.image_[v]];
    return Automorphism(std::move(image));
  }

  Automorphism inverse() const {
    std::vector<VertexIndex> image(image_.size());
    for (std::size_t v = 0; v < image_.size(); ++v) image[image_[v]] = static_cast<VertexIndex>(v);
    return Automorphism(std::move(image));
  }

  bool is_identity() const {
    for (std::size_t v = 0; v < image_.size(); ++v) {
      if (image_[v] != v) return false;
    }
    return true;
  }

  // Smallest k >= 1 with this^k = id.
  std::size_t order() const {
    std::size_t k = 1;
    for (Automorphism power = *this; !power.is_identity(); power = *this * power) ++k;
    return k;
  }

  bool is_permutation() const {
    std::vector<char> hit(image_.size(), 0);
    for (VertexIndex w : image_) {
      if (w >= image_.size() || hit[w]) return false;
      hit[w] = 1;
    }
    return true;
  }

  bool preserves_edges_of(const Graph& g) const {
    if (image_.size() != g.vertex_count() || !is_permutation()) return false;
    for (const auto& [a, b] : g.edges()) {
      if (!g.has_edge(image_[a], image_[b])) return false;
    }
    return true;
  }

  friend auto operator<=>(const Automorphism&, const Automorphism&) = default;

 private:
  std::vector<VertexIndex> image_;
};

// A cycle isomorphism from the bottom rim onto the bottom or top rim.
struct RimMap {
  std::vector<VertexIndex> domain;  // bottom rim, in cycle order
  RimEnd codomain_end = RimEnd::bottom;
  std::vector<VertexIndex> images;  // images[t] is the image of domain[t]
};

// Degree of v in AT(n, p), read off the coordinates.
inline std::size_t armchair_degree(const TubuleneParams& params, VertexId v) {
  bool rim_vertex = (v.layer == 0 && v.kind == 0) || (v.layer == params.p && v.kind == 1);
  return rim_vertex ? 2 : 3;
}

// All rotations and reflections of the 2n-cycle C1 onto C1 and onto C2 that map
// degree-2 vertices to degree-2 vertices: n per codomain.
inline std::vector<RimMap> candidate_rim_maps(const TubuleneParams& params) {
  params.validate();
  const auto bottom = rim_cycle(params, RimEnd::bottom);
  const std::size_t len = bottom.size();
  std::vector<VertexIndex> domain;
  for (const auto& v : bottom) domain.push_back(encode(params, v));

  std::vector<RimMap> maps;
  for (RimEnd end : {RimEnd::bottom, RimEnd::top}) {
    const auto target = rim_cycle(params, end);
    for (int reflect = 0; reflect < 2; ++reflect) {
      for (std::size_t shift = 0; shift < len; ++shift) {
        RimMap map{domain, end, {}};
        bool degree_preserving = true;
        for (std::size_t t = 0; t < len; ++t) {
          std::size_t pos = reflect ? (shift + len - t) % len : (shift + t) % len;
          if (armchair_degree(params, bottom[t]) != armchair_degree(params, target[pos])) {
            degree_preserving = false;
            break;
          }
          map.images.push_back(encode(params, target[pos]));
        }
        if (degree_preserving) maps.push_back(std::move(map));
      }
    }
  }
  return maps;
}

// Extends a rim map to the whole tube, layer by layer: each V^0_i vertex is the
// third neighbour of its V^1_{i-1} neighbour, then each V^1_i vertex the third
// neighbour of its V^0_i neighbour.
inline Automorphism extend_rim_map(const Graph& g, const TubuleneParams& params,
                                   const RimMap& rim) {
  constexpr VertexIndex kUnmapped = ~VertexIndex{0};
  const std::size_t count = params.vertex_count();
  if (g.vertex_count() != count) throw std::invalid_argument("graph does not match params");
  if (rim.domain.size() != rim.images.size()) throw std::invalid_argument("malformed rim map");

  std::vector<VertexIndex> image(count, kUnmapped);
  std::vector<char> used(count, 0);
  auto assign = [&](VertexIndex x, VertexIndex w) {
    if (w >= count || image[x] != kUnmapped || used[w]) {
      throw ExtensionError("conflicting image for vertex " + std::to_string(x));
    }
    image[x] = w;
    used[w] = 1;
  };
  for (std::size_t t = 0; t < rim.domain.size(); ++t) assign(rim.domain[t], rim.images[t]);

  auto propagate = [&](VertexIndex x, int anchor_layer, int anchor_kind) {
    VertexIndex anchor = kUnmapped;
    for (VertexIndex y : g.neighbors(x)) {
      VertexId c = decode(params, y);
      if (c.layer == anchor_layer && c.kind == anchor_kind) anchor = y;
    }
    if (anchor == kUnmapped || image[anchor] == kUnmapped) {
      throw ExtensionError("no mapped anchor for vertex " + std::to_string(x));
    }
    std::vector<VertexIndex> excluded;
    for (VertexIndex y : g.neighbors(anchor)) {
      if (y == x) continue;
      if (image[y] == kUnmapped) {
        throw ExtensionError("anchor neighbour not yet mapped for vertex " + std::to_string(x));
      }
      excluded.push_back(image[y]);
    }
    auto target_nbrs = g.neighbors(image[anchor]);
    if (target_nbrs.size() != 3 || excluded.size() != 2) {
      throw ExtensionError("anchor image of vertex " + std::to_string(x) + " is not of degree 3");
    }
    std::optional<VertexIndex> chosen;
    for (VertexIndex w : target_nbrs) {
      if (std::find(excluded.begin(), excluded.end(), w) != excluded.end()) continue;
      if (chosen) throw ExtensionError("ambiguous image for vertex " + std::to_string(x));
      chosen = w;
    }
    if (!chosen) throw ExtensionError("no free neighbour for vertex " + std::to_string(x));
    assign(x, *chosen);
  };

  for (int i = 1; i <= params.p; ++i) {
    for (VertexIndex x : layer_set(params, i, 0)) propagate(x, i - 1, 1);
    for (VertexIndex x : layer_set(params, i, 1)) propagate(x, i, 0);
  }

  Automorphism result(std::move(image));
  if (!result.preserves_edges_of(g)) {
    throw ExtensionError("extended map is not an automorphism");
  }
  return result;
}

// Aut(AT(n, p)) from the extensions of all candidate rim maps, sorted.
inline std::vector<Automorphism> automorphism_group(const Graph& g,
                                                    const TubuleneParams& params) {
  std::vector<Automorphism> group;
  for (const auto& rim : candidate_rim_maps(params)) group.push_back(extend_rim_map(g, params, rim));
  std::sort(group.begin(), group.end());
  if (std::adjacent_find(group.begin(), group.end()) != group.end()) {
    throw ExtensionError("distinct rim maps produced the same automorphism");
  }
  return group;
}

inline std::size_t default_brute_force_cap() {
  constexpr std::size_t kDefault = 700;
  const char* env = std::getenv("AT_MAX_BRUTE_VERTICES");
  if (env == nullptr || *env == '\0') return kDefault;
  char* end = nullptr;
  unsigned long long value = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') return kDefault;
  return static_cast<std::size_t>(value);
}

// Every automorphism of an arbitrary connected graph, by backtracking over a
// BFS vertex order. A vertex may only go to a partner with the same sorted
// distance profile that keeps all distances to previously placed vertices.
inline std::vector<Automorphism> brute_force_automorphisms(const Graph& g,
                                                           std::size_t cap = default_brute_force_cap()) {
  const std::size_t count = g.vertex_count();
  if (count > cap) {
    throw OracleRefused("brute-force oracle refused: " + std::to_string(count) +
                        " vertices exceeds cap " + std::to_string(cap));
  }
  if (count == 0) return {Automorphism{}};

  const DistanceTable table(g);
  std::vector<std::size_t> profile_class(count);
  {
    std::map<std::vector<Distance>, std::size_t> classes;
    for (VertexIndex v = 0; v < count; ++v) {
      auto row = table.row(v);
      std::vector<Distance> profile(row.begin(), row.end());
      std::sort(profile.begin(), profile.end());
      profile_class[v] = classes.try_emplace(std::move(profile), classes.size()).first->second;
    }
  }

  std::vector<VertexIndex> order;
  std::vector<VertexIndex> parent(count, 0);
  {
    const auto row = bfs_distances(g, 0);
    order.resize(count);
    std::iota(order.begin(), order.end(), VertexIndex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexIndex a, VertexIndex b) { return row.dist[a] < row.dist[b]; });
    for (VertexIndex v : order) {
      for (VertexIndex w : g.neighbors(v)) {
        if (row.dist[w] + 1 == row.dist[v]) {
          parent[v] = w;
          break;
        }
      }
    }
  }

  std::vector<VertexIndex> image(count);
  std::vector<char> used(count, 0);
  std::vector<Automorphism> found;

  auto consistent = [&](std::size_t depth, VertexIndex w) {
    const VertexIndex v = order[depth];
    if (used[w] || profile_class[v] != profile_class[w]) return false;
    for (std::size_t k = 0; k < depth; ++k) {
      if (table.at(order[k], v) != table.at(image[order[k]], w)) return false;
    }
    return true;
  };

  auto search = [&](auto& self, std::size_t depth) -> void {
    if (depth == count) {
      found.emplace_back(image);
      return;
    }
    const VertexIndex v = order[depth];
    auto try_partner = [&](VertexIndex w) {
      if (!consistent(depth, w)) return;
      image[v] = w;
      used[w] = 1;
      self(self, depth + 1);
      used[w] = 0;
    };
    if (depth == 0) {
      for (VertexIndex w = 0; w < count; ++w) try_partner(w);
    } else {
      for (VertexIndex w : g.neighbors(image[parent[v]])) try_partner(w);
    }
  };
  search(search, 0);

  std::sort(found.begin(), found.end());
  return found;
}

// Disjoint vertex sets covering V(G). `canonical()` sorts each orbit and
// orders orbits by smallest member so equality is set-of-sets equality.
struct OrbitPartition {
  std::vector<std::vector<VertexIndex>> orbits;

  OrbitPartition canonical() const {
    OrbitPartition out{orbits};
    for (auto& orbit : out.orbits) std::sort(orbit.begin(), orbit.end());
    std::sort(out.orbits.begin(), out.orbits.end());
    return out;
  }

  // Throws unless the orbits are nonempty, disjoint and cover [0, vertex_count).
  void check_covers(std::size_t vertex_count) const {
    std::vector<char> seen(vertex_count, 0);
    std::size_t covered = 0;
    for (const auto& orbit : orbits) {
      if (orbit.empty()) throw std::invalid_argument("partition has an empty orbit");
      for (VertexIndex v : orbit) {
        if (v >= vertex_count) throw std::invalid_argument("partition names unknown vertex " + std::to_string(v));
        if (seen[v]) throw std::invalid_argument("partition repeats vertex " + std::to_string(v));
        seen[v] = 1;
        ++covered;
      }
    }
    if (covered != vertex_count) throw std::invalid_argument("partition does not cover the graph");
  }

  friend bool operator==(const OrbitPartition& a, const OrbitPartition& b) {
    return a.canonical().orbits == b.canonical().orbits;
  }
};

// Orbits of the natural action, via union-find over all images.
inline OrbitPartition orbits_from_action(std::span<const Automorphism> auts) {
  if (auts.empty()) throw std::invalid_argument("orbits_from_action: empty automorphism list");
  const std::size_t count = auts.front().size();
  std::vector<VertexIndex> root(count);
  std::iota(root.begin(), root.end(), VertexIndex{0});
  auto find = [&](VertexIndex v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (const auto& alpha : auts) {
    if (alpha.size() != count) throw std::invalid_argument("orbits_from_action: mixed sizes");
    for (VertexIndex v = 0; v < count; ++v) {
      VertexIndex a = find(v), b = find(alpha(v));
      if (a != b) root[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<VertexIndex, std::vector<VertexIndex>> grouped;
  for (VertexIndex v = 0; v < count; ++v) grouped[find(v)].push_back(v);
  OrbitPartition partition;
  for (auto& [_, orbit] : grouped) partition.orbits.push_back(std::move(orbit));
  return partition.canonical();
}

// O^0_i = V^0_i u V^1_{p-i} and O^1_i = V^1_i u V^0_{p-i} for i < (p+1)/2,
// plus O_{p/2} = V^0_{p/2} u V^1_{p/2} when p is even.
inline OrbitPartition theorem_orbits(const TubuleneParams& params) {
  params.validate();
  auto join = [&](int layer_a, int kind_a, int layer_b, int kind_b) {
    auto orbit = layer_set(params, layer_a, kind_a);
    auto other = layer_set(params, layer_b, kind_b);
    orbit.insert(orbit.end(), other.begin(), other.end());
    return orbit;
  };
  OrbitPartition partition;
  for (int i = 0; 2 * i < params.p; ++i) {
    partition.orbits.push_back(join(i, 0, params.p - i, 1));
    partition.orbits.push_back(join(i, 1, params.p - i, 0));
  }
  if (params.p % 2 == 0) partition.orbits.push_back(join(params.p / 2, 0, params.p / 2, 1));
  return partition.canonical();
}

struct GroupStructureReport {
  std::size_t order = 0;
  bool satisfies_dihedral_times_z2 = false;
  std::optional<Automorphism> rotation;
  std::optional<Automorphism> reflection;
  std::optional<Automorphism> central_involution;
};

// Searches for r of order n/2, an involution s with s r s = r^-1, and a
// central involution z such that a -> r^a s^b z^c enumerates the group
// without repeats. A negative answer is a result, not an error.
inline GroupStructureReport group_structure(std::span<const Automorphism> auts,
                                            const TubuleneParams& params) {
  GroupStructureReport report;
  report.order = auts.size();
  const std::size_t half = static_cast<std::size_t>(params.n / 2);
  if (auts.empty() || report.order != 4 * half) return report;

  std::vector<Automorphism> sorted(auts.begin(), auts.end());
  std::sort(sorted.begin(), sorted.end());
  const auto id = Automorphism::identity(sorted.front().size());
  auto is_involution = [&](const Automorphism& a) { return (a * a).is_identity(); };

  for (const auto& r : sorted) {
    if (r.order() != half) continue;
    std::vector<Automorphism> powers{id};
    for (std::size_t a = 1; a < half; ++a) powers.push_back(r * powers.back());
    const Automorphism r_inv = r.inverse();
    for (const auto& s : sorted) {
      if (!is_involution(s) || s * r * s != r_inv) continue;
      for (const auto& z : sorted) {
        if (!is_involution(z) || z * r != r * z || z * s != s * z) continue;
        std::vector<Automorphism> products;
        for (const auto& ra : powers) {
          for (int b = 0; b < 2; ++b) {
            Automorphism rs = b ? ra * s : ra;
            products.push_back(rs);
            products.push_back(rs * z);
          }
        }
        std::sort(products.begin(), products.end());
        if (std::adjacent_find(products.begin(), products.end()) != products.end()) continue;
        if (products != sorted) continue;
        report.satisfies_dihedral_times_z2 = true;
        report.rotation = r;
        report.reflection = s;
        report.central_involution = z;
        return report;
      }
    }
  }
  return report;
}

}  // namespace armchair
