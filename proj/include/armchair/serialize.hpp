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

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "armchair/graph_core.hpp"
#include "armchair/tubulene.hpp"

namespace armchair {

// Graph JSON: {"n", "p", "vertex_count", "vertices": [{"id", "layer", "kind",
// "index"}...], "edges": [[lo, hi]...]} with edges in lexicographic order.
// Written by hand so the byte layout is fixed.
inline void write_graph_json(std::ostream& out, const TubuleneParams& params, const Graph& g) {
  out << "{\n";
  out << "  \"n\": " << params.n << ",\n";
  out << "  \"p\": " << params.p << ",\n";
  out << "  \"vertex_count\": " << g.vertex_count() << ",\n";
  out << "  \"vertices\": [";
  for (VertexIndex id = 0; id < g.vertex_count(); ++id) {
    const VertexId v = decode(params, id);
    out << (id ? ",\n" : "\n") << "    {\"id\": " << id << ", \"layer\": " << v.layer
        << ", \"kind\": " << v.kind << ", \"index\": " << v.index << "}";
  }
  out << "\n  ],\n";
  out << "  \"edges\": [";
  bool first = true;
  for (const auto& [a, b] : g.edges()) {
    out << (first ? "\n" : ",\n") << "    [" << a << ", " << b << "]";
    first = false;
  }
  out << "\n  ]\n}\n";
}

// One "lo hi" pair per line, same order as the JSON edge list.
inline void write_edge_list(std::ostream& out, const Graph& g) {
  for (const auto& [a, b] : g.edges()) out << a << ' ' << b << '\n';
}

struct ParsedGraph {
  TubuleneParams params;
  Graph graph;
};

// Reads the graph JSON back. Vertex triples must agree with the canonical ids.
inline ParsedGraph read_graph_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  const auto params = TubuleneParams::make(doc.at("n").get<int>(), doc.at("p").get<int>());
  const auto count = doc.at("vertex_count").get<std::size_t>();
  if (count != params.vertex_count()) throw std::invalid_argument("vertex_count does not match n, p");
  const auto& vertices = doc.at("vertices");
  if (vertices.size() != count) throw std::invalid_argument("vertex list length mismatch");
  for (const auto& v : vertices) {
    VertexId coord{v.at("layer").get<int>(), v.at("kind").get<int>(), v.at("index").get<int>()};
    if (encode(params, coord) != v.at("id").get<VertexIndex>()) {
      throw std::invalid_argument("vertex triple does not match its canonical id");
    }
  }
  std::vector<Edge> edges;
  for (const auto& e : doc.at("edges")) {
    edges.emplace_back(e.at(0).get<VertexIndex>(), e.at(1).get<VertexIndex>());
  }
  return ParsedGraph{params, Graph(count, edges)};
}

}  // namespace armchair
