// Copyright 2026 The rpivot Authors.
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

#include "rpivot/graph.h"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace rpivot {

namespace {

std::string PairString(VertexId u, VertexId v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace

Graph Graph::Build(VertexId n, std::span<const Edge> edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  std::vector<Edge> directed;
  directed.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw std::invalid_argument("edge " + PairString(e.u, e.v) +
                                  " has an endpoint outside [0, " +
                                  std::to_string(n) + ")");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop " + PairString(e.u, e.v));
    }
    directed.push_back({e.u, e.v});
    directed.push_back({e.v, e.u});
  }
  std::sort(directed.begin(), directed.end());
  directed.erase(std::unique(directed.begin(), directed.end()), directed.end());

  Graph g;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  g.adj_.reserve(directed.size());
  for (const Edge& e : directed) {
    ++g.offsets_[e.u + 1];
    g.adj_.push_back(e.v);
  }
  for (VertexId v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  return g;
}

VertexId Graph::MaxDegree() const {
  VertexId best = 0;
  for (VertexId v = 0; v < n(); ++v) best = std::max(best, Degree(v));
  return best;
}

bool Graph::HasEdge(VertexId u, VertexId v) const {
  if (u < 0 || u >= n() || v < 0 || v >= n()) {
    throw std::invalid_argument("vertex pair " + PairString(u, v) +
                                " out of range");
  }
  if (u == v) throw std::invalid_argument("HasEdge called with u == v");
  if (Degree(u) > Degree(v)) std::swap(u, v);
  auto nbrs = Neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m()));
  for (VertexId u = 0; u < n(); ++u) {
    for (VertexId v : Neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph Graph::InducedSubgraph(std::span<const VertexId> vertices) const {
  std::unordered_map<VertexId, VertexId> local;
  local.reserve(vertices.size() * 2);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!local.emplace(vertices[i], static_cast<VertexId>(i)).second) {
      throw std::invalid_argument("InducedSubgraph: repeated vertex " +
                                  std::to_string(vertices[i]));
    }
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (VertexId w : Neighbors(vertices[i])) {
      auto it = local.find(w);
      if (it != local.end() && static_cast<VertexId>(i) < it->second) {
        edges.push_back({static_cast<VertexId>(i), it->second});
      }
    }
  }
  return Build(static_cast<VertexId>(vertices.size()), edges);
}

}  // namespace rpivot
