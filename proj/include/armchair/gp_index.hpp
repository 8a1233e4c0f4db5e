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

#include <cstdint>
#include <span>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "armchair/graph_core.hpp"
#include "armchair/symmetry.hpp"

namespace armchair {

using BigInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

inline bool is_integer(const ExactRational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

// Graovac-Pisanski index from its definition:
//   |V| / (2 |Aut|) * sum_u sum_alpha d(u, alpha(u)).
// One BFS row per u serves every alpha.
inline ExactRational gp_by_definition(const Graph& g, std::span<const Automorphism> auts) {
  if (auts.empty()) throw std::invalid_argument("gp_by_definition: empty automorphism list");
  for (const auto& alpha : auts) {
    if (alpha.size() != g.vertex_count()) {
      throw std::invalid_argument("gp_by_definition: automorphism size does not match graph");
    }
  }
  BigInt displacement = 0;
  for (VertexIndex u = 0; u < g.vertex_count(); ++u) {
    const auto row = bfs_distances(g, u);
    std::uint64_t local = 0;
    for (const auto& alpha : auts) local += row.dist[alpha(u)];
    displacement += local;
  }
  return ExactRational(BigInt(g.vertex_count()) * displacement, BigInt(2) * auts.size());
}

// Orbit form: |V| * sum_i W(V_i) / |V_i|.
inline ExactRational gp_by_orbits(const Graph& g, const OrbitPartition& partition) {
  partition.check_covers(g.vertex_count());
  ExactRational total = 0;
  for (const auto& orbit : partition.orbits) {
    total += ExactRational(BigInt(wiener_of_subset(g, orbit)), BigInt(orbit.size()));
  }
  return total * BigInt(g.vertex_count());
}

// W'(G): sum of the Wiener indices of the orbits.
inline BigInt w_prime(const Graph& g, const OrbitPartition& partition) {
  partition.check_covers(g.vertex_count());
  BigInt total = 0;
  for (const auto& orbit : partition.orbits) total += wiener_of_subset(g, orbit);
  return total;
}

}  // namespace armchair
