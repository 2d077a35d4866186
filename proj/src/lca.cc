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


#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "rpivot/executors.h"

namespace rpivot {

std::int32_t ProbeOracle::Degree(VertexId v) {
  ++probes_;
  return g_->Degree(v);
}

VertexId ProbeOracle::Neighbor(VertexId v, std::int32_t i) {
  ++probes_;
  return g_->Neighbors(v)[static_cast<std::size_t>(i)];
}

LcaAnswer LcaQuery(ProbeOracle& oracle, const RankAssignment& ranks, int r,
                   VertexId v) {
  if (r < 1) throw std::invalid_argument("LCA r-Pivot needs r >= 1");
  if (ranks.n() != oracle.n()) {
    throw std::invalid_argument("rank assignment does not cover the graph");
  }
  const int radius = 2 * r + 2;
  const std::int64_t start = oracle.probes();
  std::unordered_map<VertexId, int> dist{{v, 0}};
  std::deque<VertexId> queue{v};
  std::vector<Edge> edges;
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    const int dx = dist[x];
    const std::int32_t deg = oracle.Degree(x);
    for (std::int32_t i = 0; i < deg; ++i) {
      const VertexId y = oracle.Neighbor(x, i);
      edges.push_back({x, y});
      if (dist.emplace(y, dx + 1).second && dx + 1 < radius) {
        queue.push_back(y);
      }
    }
  }

  std::vector<VertexId> ball;
  ball.reserve(dist.size());
  for (const auto& [y, d] : dist) ball.push_back(y);
  std::sort(ball.begin(), ball.end());
  auto local = [&](VertexId y) {
    return static_cast<VertexId>(
        std::lower_bound(ball.begin(), ball.end(), y) - ball.begin());
  };
  for (Edge& e : edges) e = {local(e.u), local(e.v)};
  const Graph sub = Graph::Build(static_cast<VertexId>(ball.size()), edges);
  const RankAssignment sub_ranks = ranks.Restrict(ball);
  const RPivotState state = RPivot(sub, sub_ranks, r);

  LcaAnswer out;
  const VertexId lv = local(v);
  out.pivot = state.is_pivot[lv] != 0;
  const VertexId p = state.cluster_pivot[lv];
  out.cluster = p == kNoVertex ? v : ball[p];
  out.ball_vertices = static_cast<std::int64_t>(ball.size());
  out.report.model = "lca";
  out.report.probes = oracle.probes() - start;
  return out;
}

ExecutorResult LcaExecuteAll(const Graph& g, const RankAssignment& ranks,
                             int r) {
  ProbeOracle oracle(g);
  ExecutorResult out;
  const VertexId n = g.n();
  out.cluster_pivot.assign(static_cast<std::size_t>(n), kNoVertex);
  out.is_pivot.assign(static_cast<std::size_t>(n), 0);
  out.report.model = "lca";
  for (VertexId v = 0; v < n; ++v) {
    const LcaAnswer a = LcaQuery(oracle, ranks, r, v);
    out.is_pivot[v] = a.pivot ? 1 : 0;
    if (a.pivot) {
      out.cluster_pivot[v] = v;
    } else if (a.cluster != v) {
      out.cluster_pivot[v] = a.cluster;
    }
    out.report.probes = std::max(out.report.probes, a.report.probes);
  }
  out.clustering = ClusteringFromPivots(ranks, out.cluster_pivot);
  return out;
}

std::vector<VertexId> Ball(const Graph& g, VertexId v, int radius) {
  std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
  dist[v] = 0;
  std::deque<VertexId> queue{v};
  std::vector<VertexId> out{v};
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    if (dist[x] == radius) continue;
    for (VertexId y : g.Neighbors(x)) {
      if (dist[y] >= 0) continue;
      dist[y] = dist[x] + 1;
      out.push_back(y);
      queue.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t BallProbeBound(const Graph& g, VertexId v, int radius) {
  std::int64_t total = 0;
  for (VertexId y : Ball(g, v, radius)) total += g.Degree(y) + 1;
  return total;
}

}  // namespace rpivot
