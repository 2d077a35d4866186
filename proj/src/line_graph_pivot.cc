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


#include "rpivot/line_graph_pivot.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace rpivot {

LineGraphPivotCounter::LineGraphPivotCounter(const Graph& host,
                                             std::span<const Edge> host_edges)
    : host_n_(host.n()), edges_(host_edges.begin(), host_edges.end()) {
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= host_n_ || e.v >= host_n_ || e.u == e.v) {
      throw std::invalid_argument("host edge out of range");
    }
  }
}

void LineGraphPivotCounter::Run(std::span<const std::uint32_t> edge_key, int r,
                                std::vector<char>* full_pivot,
                                std::vector<char>* truncated_pivot) const {
  const std::size_t m = edges_.size();
  if (edge_key.size() != m) {
    throw std::invalid_argument("edge_key size does not match host edges");
  }
  if (r < 1) throw std::invalid_argument("r-Pivot needs r >= 1");

  // Greedy maximal matching in key order.
  std::vector<std::int32_t> by_key(m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    if (edge_key[i] >= m || by_key[edge_key[i]] != -1) {
      throw std::invalid_argument("edge_key is not a permutation");
    }
    by_key[edge_key[i]] = static_cast<std::int32_t>(i);
  }
  std::vector<char> covered(static_cast<std::size_t>(host_n_), 0);
  full_pivot->assign(m, 0);
  for (std::int32_t i : by_key) {
    const Edge& e = edges_[i];
    if (covered[e.u] || covered[e.v]) continue;
    (*full_pivot)[i] = 1;
    covered[e.u] = covered[e.v] = 1;
  }

  // Truncated rounds. An edge is unsettled iff both endpoints are uncovered;
  // it pivots iff its key is the minimum over unsettled edges at both ends.
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::fill(covered.begin(), covered.end(), 0);
  truncated_pivot->assign(m, 0);
  std::vector<std::uint32_t> min_key(static_cast<std::size_t>(host_n_));
  std::vector<std::int32_t> fresh;
  for (int t = 1; t <= r; ++t) {
    std::fill(min_key.begin(), min_key.end(), kNone);
    bool any = false;
    for (std::size_t i = 0; i < m; ++i) {
      const Edge& e = edges_[i];
      if (covered[e.u] || covered[e.v]) continue;
      any = true;
      min_key[e.u] = std::min(min_key[e.u], edge_key[i]);
      min_key[e.v] = std::min(min_key[e.v], edge_key[i]);
    }
    if (!any) break;
    fresh.clear();
    for (std::size_t i = 0; i < m; ++i) {
      const Edge& e = edges_[i];
      if (covered[e.u] || covered[e.v]) continue;
      if (min_key[e.u] == edge_key[i] && min_key[e.v] == edge_key[i]) {
        fresh.push_back(static_cast<std::int32_t>(i));
      }
    }
    for (std::int32_t i : fresh) {
      (*truncated_pivot)[i] = 1;
      covered[edges_[i].u] = covered[edges_[i].v] = 1;
    }
  }
}

LineGraphPivotCounts LineGraphPivotCounter::Count(
    std::span<const std::uint32_t> edge_key, int r) const {
  std::vector<char> full, truncated;
  Run(edge_key, r, &full, &truncated);
  LineGraphPivotCounts out;
  out.full = std::count(full.begin(), full.end(), 1);
  out.truncated = std::count(truncated.begin(), truncated.end(), 1);
  return out;
}

}  // namespace rpivot
