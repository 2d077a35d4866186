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

#ifndef RPIVOT_GRAPH_H_
#define RPIVOT_GRAPH_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rpivot {

using VertexId = std::int32_t;

// Unordered vertex pair; Build() accepts either orientation.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Thrown when an exactly-checkable claim fails on a concrete input. Kept
// distinct from std::invalid_argument so callers never mistake a falsified
// invariant for a bad argument.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Immutable simple undirected graph in compressed sorted-adjacency form.
//
// Invariants: no self-loops, no duplicate neighbors, symmetric adjacency and
// strictly increasing neighbor lists. Vertices are the dense IDs [0, n).
class Graph {
 public:
  Graph() = default;

  // Canonicalizes `edges`: duplicates collapse, orientation is ignored.
  // Throws std::invalid_argument naming the offending pair on an
  // out-of-range endpoint or a self-loop.
  static Graph Build(VertexId n, std::span<const Edge> edges);

  VertexId n() const { return static_cast<VertexId>(offsets_.size()) - 1; }
  std::int64_t m() const { return static_cast<std::int64_t>(adj_.size()) / 2; }

  std::span<const VertexId> Neighbors(VertexId v) const {
    return {adj_.data() + offsets_[v],
            static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }
  VertexId Degree(VertexId v) const {
    return static_cast<VertexId>(offsets_[v + 1] - offsets_[v]);
  }
  VertexId MaxDegree() const;

  // Binary search in the shorter list. Throws on u == v or out of range.
  bool HasEdge(VertexId u, VertexId v) const;

  // Edges with u < v in lexicographic order.
  std::vector<Edge> Edges() const;

  // Induced subgraph on `vertices` (must be distinct); vertex i of the result
  // is vertices[i].
  Graph InducedSubgraph(std::span<const VertexId> vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::int64_t> offsets_{0};
  std::vector<VertexId> adj_;
};

// Normalized unordered pair key, usable in hash maps.
inline std::uint64_t PairKey(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}
inline std::pair<VertexId, VertexId> PairFromKey(std::uint64_t key) {
  return {static_cast<VertexId>(key >> 32),
          static_cast<VertexId>(key & 0xffffffffu)};
}

}  // namespace rpivot

#endif  // RPIVOT_GRAPH_H_
