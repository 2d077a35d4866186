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


#include "rpivot/experiments.h"

#include <cmath>
#include <numeric>
#include <span>
#include <stdexcept>

#include "rpivot/clustering.h"
#include "rpivot/line_graph_pivot.h"
#include "rpivot/parallel.h"
#include "rpivot/random.h"

namespace rpivot {

CliquePathReport RunCliquePath(VertexId clique_size, int rounds) {
  AdversarialInstance inst = CliquePlusPath(clique_size, rounds);
  const RPivotState run = RPivot(inst.graph, inst.pi, rounds);
  const VertexId path = 2 * rounds;
  std::vector<std::int64_t> labels(static_cast<std::size_t>(inst.graph.n()));
  for (VertexId v = 0; v < inst.graph.n(); ++v) labels[v] = v < path ? v : path;
  const Clustering witness = Clustering::FromLabels(labels);

  CliquePathReport out;
  out.clique_size = clique_size;
  out.rounds = rounds;
  out.n = inst.graph.n();
  out.rpivot_cost = ClusteringCost(inst.graph, run.clustering);
  out.witness_cost = ClusteringCost(inst.graph, witness);
  out.ratio = out.witness_cost > 0
                  ? static_cast<double>(out.rpivot_cost) / out.witness_cost
                  : 0.0;
  out.reference = static_cast<double>(clique_size) * (clique_size - 1) /
                  (2.0 * (2 * rounds + 1));
  out.pivots = run.pivots;
  out.unsettled = static_cast<std::int64_t>(run.unsettled_after.size());
  out.metadata = inst.metadata;
  return out;
}

LayeredPoint RunLayeredPoint(int rounds, std::int64_t requested_top,
                             std::int64_t trials, std::uint64_t seed,
                             std::int64_t edge_budget, int threads) {
  if (trials < 2) throw std::invalid_argument("Monte-Carlo needs trials >= 2");
  LayeredHost host = BuildLayeredHost(rounds, requested_top, edge_budget);
  const std::vector<Edge> edges = host.host.Edges();
  const LineGraphPivotCounter counter(host.host, edges);

  std::vector<LineGraphPivotCounts> rows(static_cast<std::size_t>(trials));
  ForEachTrial(trials, threads, [&](std::int64_t t) {
    Rng rng = MakeRng(seed, static_cast<std::uint64_t>(t));
    std::vector<std::uint32_t> key(edges.size());
    std::iota(key.begin(), key.end(), 0u);
    Shuffle(std::span<std::uint32_t>(key), rng);
    rows[t] = counter.Count(key, rounds);
  });

  LayeredPoint out;
  out.params = host.params;
  out.trials = trials;
  for (const LineGraphPivotCounts& row : rows) {
    out.full.Add(static_cast<double>(row.full));
    out.truncated.Add(static_cast<double>(row.truncated));
  }
  const double mf = out.full.mean();
  const double mt = out.truncated.mean();
  double cov = 0.0;
  for (const LineGraphPivotCounts& row : rows) {
    cov += (row.full - mf) * (row.truncated - mt);
  }
  cov /= static_cast<double>(trials - 1);
  out.ratio = mt / mf;
  const double var = (out.truncated.variance() +
                      out.ratio * out.ratio * out.full.variance() -
                      2.0 * out.ratio * cov) /
                     (mf * mf * static_cast<double>(trials));
  out.ratio_stderr = std::sqrt(std::max(0.0, var));
  return out;
}

}  // namespace rpivot
