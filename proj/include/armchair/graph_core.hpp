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
#include <cstddef>
#include <cstdint>
#include <deque>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace armchair {

using VertexIndex = std::uint32_t;
using Distance = std::uint32_t;
using Edge = std::pair<VertexIndex, VertexIndex>;

// Undirected, simple, connected graph with sorted adjacency lists.
// Immutable after construction; all invariants are checked once in the
// constructor.
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t vertex_count, std::span<const Edge> edges)
      : adjacency_(vertex_count) {
    for (const auto& [a, b] : edges) {
      if (a >= vertex_count || b >= vertex_count) {
        throw std::invalid_argument("Graph: edge endpoint out of range");
      }
      if (a == b) throw std::invalid_argument("Graph: self-loop");
      adjacency_[a].push_back(b);
      adjacency_[b].push_back(a);
    }
    for (auto& nbrs : adjacency_) {
      std::sort(nbrs.begin(), nbrs.end());
      if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
        throw std::invalid_argument("Graph: duplicate edge");
      }
    }
    edge_count_ = edges.size();
    if (!is_connected()) throw std::invalid_argument("Graph: not connected");
  }

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const VertexIndex> neighbors(VertexIndex v) const {
    check_vertex(v);
    return adjacency_[v];
  }

  std::size_t degree(VertexIndex v) const { return neighbors(v).size(); }

  bool has_edge(VertexIndex a, VertexIndex b) const {
    auto nbrs = neighbors(a);
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
  }

  // Edges as (low, high) pairs in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexIndex a = 0; a < adjacency_.size(); ++a) {
      for (VertexIndex b : adjacency_[a]) {
        if (a < b) out.emplace_back(a, b);
      }
    }
    return out;
  }

  void check_vertex(VertexIndex v) const {
    if (v >= adjacency_.size()) {
      throw std::invalid_argument("unknown vertex id " + std::to_string(v));
    }
  }

 private:
  bool is_connected() const {
    if (adjacency_.empty()) return true;
    std::vector<char> seen(adjacency_.size(), 0);
    std::vector<VertexIndex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      VertexIndex x = stack.back();
      stack.pop_back();
      for (VertexIndex y : adjacency_[x]) {
        if (!seen[y]) {
          seen[y] = 1;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    return reached == adjacency_.size();
  }

  std::vector<std::vector<VertexIndex>> adjacency_;
  std::size_t edge_count_ = 0;
};

struct DistanceRow {
  VertexIndex source = 0;
  std::vector<Distance> dist;
};

// Hop distances from `source` to every vertex.
inline DistanceRow bfs_distances(const Graph& g, VertexIndex source) {
  g.check_vertex(source);
  constexpr Distance kUnseen = ~Distance{0};
  DistanceRow row{source, std::vector<Distance>(g.vertex_count(), kUnseen)};
  std::deque<VertexIndex> queue{source};
  row.dist[source] = 0;
  while (!queue.empty()) {
    VertexIndex x = queue.front();
    queue.pop_front();
    for (VertexIndex y : g.neighbors(x)) {
      if (row.dist[y] == kUnseen) {
        row.dist[y] = row.dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return row;
}

// All-pairs distances as a dense |V| x |V| table, one BFS per source.
// Rows are filled by `jobs` workers over disjoint source ranges.
class DistanceTable {
 public:
  explicit DistanceTable(const Graph& g, unsigned jobs = 1)
      : size_(g.vertex_count()), cells_(size_ * size_) {
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(size_ ? size_ : 1)));
    auto fill = [&](std::size_t begin, std::size_t end) {
      for (std::size_t s = begin; s < end; ++s) {
        auto row = bfs_distances(g, static_cast<VertexIndex>(s));
        std::copy(row.dist.begin(), row.dist.end(), cells_.begin() + s * size_);
      }
    };
    if (jobs == 1) {
      fill(0, size_);
      return;
    }
    std::vector<std::jthread> workers;
    std::size_t chunk = (size_ + jobs - 1) / jobs;
    for (std::size_t b = 0; b < size_; b += chunk) {
      workers.emplace_back(fill, b, std::min(size_, b + chunk));
    }
  }

  std::size_t vertex_count() const { return size_; }

  Distance at(VertexIndex u, VertexIndex v) const {
    check(u);
    check(v);
    return cells_[u * size_ + v];
  }

  std::span<const Distance> row(VertexIndex u) const {
    check(u);
    return std::span<const Distance>(cells_).subspan(u * size_, size_);
  }

 private:
  void check(VertexIndex v) const {
    if (v >= size_) {
      throw std::invalid_argument("unknown vertex id " + std::to_string(v));
    }
  }

  std::size_t size_;
  std::vector<Distance> cells_;
};

namespace detail {

inline std::uint64_t row_sum(std::span<const Distance> dist,
                             std::span<const VertexIndex> targets) {
  std::uint64_t total = 0;
  for (VertexIndex t : targets) {
    if (t >= dist.size()) {
      throw std::invalid_argument("unknown vertex id " + std::to_string(t));
    }
    total += dist[t];
  }
  return total;
}

}  // namespace detail

// d(x, S): sum of distances from x to the members of S.
inline std::uint64_t distance_sum_to_set(const Graph& g, VertexIndex x,
                                         std::span<const VertexIndex> s) {
  for (VertexIndex t : s) g.check_vertex(t);
  return detail::row_sum(bfs_distances(g, x).dist, s);
}

inline std::uint64_t distance_sum_to_set(const DistanceTable& table, VertexIndex x,
                                         std::span<const VertexIndex> s) {
  return detail::row_sum(table.row(x), s);
}

// W(S) with distances taken in the whole graph.
inline std::uint64_t wiener_of_subset(const Graph& g, std::span<const VertexIndex> s) {
  for (VertexIndex t : s) g.check_vertex(t);
  std::uint64_t twice = 0;
  for (VertexIndex u : s) twice += detail::row_sum(bfs_distances(g, u).dist, s);
  return twice / 2;
}

inline std::uint64_t wiener_of_subset(const DistanceTable& table,
                                      std::span<const VertexIndex> s) {
  std::uint64_t twice = 0;
  for (VertexIndex u : s) twice += detail::row_sum(table.row(u), s);
  return twice / 2;
}

inline std::uint64_t wiener_index(const Graph& g) {
  std::uint64_t twice = 0;
  for (VertexIndex u = 0; u < g.vertex_count(); ++u) {
    for (Distance d : bfs_distances(g, u).dist) twice += d;
  }
  return twice / 2;
}

inline std::uint64_t wiener_index(const DistanceTable& table) {
  std::uint64_t twice = 0;
  for (VertexIndex u = 0; u < table.vertex_count(); ++u) {
    for (Distance d : table.row(u)) twice += d;
  }
  return twice / 2;
}

}  // namespace armchair
