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

#ifndef RPIVOT_GENERATORS_H_
#define RPIVOT_GENERATORS_H_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rpivot/graph.h"
#include "rpivot/rank.h"

namespace rpivot {

Graph ErdosRenyi(VertexId n, double p, std::uint64_t seed);
Graph DisjointCliques(std::span<const VertexId> sizes);
Graph CompleteGraph(VertexId n);
Graph PathGraph(VertexId n);
Graph CycleGraph(VertexId n);
// Vertex 0 is the center.
Graph StarGraph(VertexId leaves);
Graph PetersenGraph();

using Metadata = std::vector<std::pair<std::string, std::int64_t>>;

// A graph together with a hand-picked rank order.
struct AdversarialInstance {
  Graph graph;
  RankAssignment pi;
  Metadata metadata;
};

// K_N with a path of 2r vertices hanging off it. Path vertices are 0..2r-1
// (vertex 0 has degree one, vertex 2r-1 attaches to clique vertex 2r);
// clique vertices are 2r..N+2r-1. The adversarial order is the identity:
// path ranks increase toward the clique, clique ranks follow by ID.
AdversarialInstance CliquePlusPath(VertexId clique_size, int rounds);

// Parameters of the layered host graph H whose line graph separates the
// pivot-set sizes of r-Pivot and Pivot.
//
// t = 2r + 2 layers; |V_i| = N / alpha^(t-i); each vertex of V_i has
// alpha^(2(t-i)) neighbors in V_(i+1), each vertex of V_(i+1) has
// alpha^(2(t-i)-1) neighbors in V_i; V_t carries a perfect matching.
//
// alpha is the largest integer >= 2 with alpha^(3t-4) <= N, which is the
// smallest top layer for which the V_1 -> V_2 wiring is simple. N is rounded
// up to the first even multiple of alpha^(t-1) satisfying that bound.
struct LayeredParams {
  int rounds = 0;
  int layers = 0;  // t
  std::int64_t requested_top = 0;
  std::int64_t top = 0;  // N actually used
  std::int64_t alpha = 0;
  std::vector<std::int64_t> layer_size;    // V_1 .. V_t
  std::vector<std::int64_t> right_degree;  // into V_(i+1); 0 for V_t
  std::vector<std::int64_t> left_degree;   // into V_(i-1); 0 for V_1
  std::int64_t host_edges = 0;
  std::int64_t line_graph_edges = 0;  // sum over H-vertices of C(deg, 2)
};

inline constexpr std::int64_t kDefaultEdgeBudget = 10'000'000;

// Throws std::invalid_argument naming the violated constraint (r < 1,
// overflow, or host edge count above `edge_budget`).
LayeredParams ResolveLayeredParams(int rounds, std::int64_t requested_top,
                                   std::int64_t edge_budget = kDefaultEdgeBudget);

struct LayeredHost {
  LayeredParams params;
  Graph host;
  std::vector<int> layer_of;  // 1-based layer of each host vertex
};

// Deterministic circulant wiring: slot s = j * d_right + k of vertex j in V_i
// connects to vertex s mod |V_(i+1)| of V_(i+1).
LayeredHost BuildLayeredHost(int rounds, std::int64_t requested_top,
                             std::int64_t edge_budget = kDefaultEdgeBudget);

struct LineGraphResult {
  Graph graph;
  // Vertex i of `graph` is host edge host_edges[i] (u < v, lexicographic).
  std::vector<Edge> host_edges;
};

// Throws std::invalid_argument if the line graph would exceed `edge_budget`.
LineGraphResult LineGraph(const Graph& host,
                          std::int64_t edge_budget = kDefaultEdgeBudget);

struct LayeredLineGraph {
  LayeredHost layered;
  LineGraphResult line;
};

LayeredLineGraph BuildLayeredLineGraph(
    int rounds, std::int64_t requested_top,
    std::int64_t edge_budget = kDefaultEdgeBudget);

}  // namespace rpivot

#endif  // RPIVOT_GENERATORS_H_
