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


// Pivot and r-Pivot on the line graph L(H) of a host graph H, computed on H
// without materializing L(H). A pivot set of L(H) is a matching of H; an
// edge of H is settled once either endpoint is covered by a pivot edge.

#ifndef RPIVOT_LINE_GRAPH_PIVOT_H_
#define RPIVOT_LINE_GRAPH_PIVOT_H_

#include <cstdint>
#include <span>
#include <vector>

#include "rpivot/graph.h"

namespace rpivot {

struct LineGraphPivotCounts {
  std::int64_t full = 0;       // |P_PIV|: greedy maximal matching size
  std::int64_t truncated = 0;  // |P_rPIV| after r rounds
};

class LineGraphPivotCounter {
 public:
  // Vertex i of L(H) is host_edges[i].
  LineGraphPivotCounter(const Graph& host, std::span<const Edge> host_edges);

  // edge_key must be a bijection onto [0, |host_edges|); smaller key means
  // lower rank.
  LineGraphPivotCounts Count(std::span<const std::uint32_t> edge_key,
                             int r) const;

  // Per-edge pivot flags of both runs, for cross-checks against the
  // materialized line graph.
  void Run(std::span<const std::uint32_t> edge_key, int r,
           std::vector<char>* full_pivot,
           std::vector<char>* truncated_pivot) const;

 private:
  VertexId host_n_ = 0;
  std::vector<Edge> edges_;
};

}  // namespace rpivot

#endif  // RPIVOT_LINE_GRAPH_PIVOT_H_
