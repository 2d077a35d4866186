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


#include "rpivot/exact.h"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

#include "rpivot/parallel.h"
#include "rpivot/pivot.h"
#include "rpivot/random.h"

namespace rpivot {

namespace {

struct OptSearch {
  int n = 0;
  std::vector<std::uint32_t> adj;
  std::vector<std::uint32_t> members;  // per open cluster
  std::vector<int> assign;
  std::vector<int> best_assign;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::int64_t examined = 0;

  void Run(int i, std::uint32_t placed, std::int64_t cost) {
    if (cost >= best) return;
    if (i == n) {
      ++examined;
      best = cost;
      best_assign = assign;
      return;
    }
    const std::uint32_t a = adj[i];
    const int open = static_cast<int>(members.size());
    for (int c = 0; c <= open; ++c) {
      std::uint32_t m = c < open ? members[c] : 0u;
      // Non-edges to cluster mates plus edges to earlier vertices elsewhere.
      const std::int64_t inc = std::popcount(m & ~a) +
                               std::popcount(a & placed & ~m);
      if (c == open) members.push_back(0u);
      members[c] |= 1u << i;
      assign[i] = c;
      Run(i + 1, placed | (1u << i), cost + inc);
      members[c] &= ~(1u << i);
      if (c == open) members.pop_back();
    }
  }
};

}  // namespace

OptResult BruteForceOpt(const Graph& g, VertexId max_n) {
  if (max_n > 30) max_n = 30;
  if (g.n() > max_n) {
    throw std::invalid_argument(
        "exact optimum is limited to n <= " + std::to_string(max_n) +
        " vertices (got " + std::to_string(g.n()) +
        "); use a Monte-Carlo estimate with a packing lower bound instead");
  }
  OptResult out;
  if (g.n() == 0) {
    out.witness = Clustering::FromIds({});
    out.partitions_examined = 1;
    return out;
  }
  OptSearch s;
  s.n = g.n();
  s.adj.assign(static_cast<std::size_t>(s.n), 0u);
  for (VertexId v = 0; v < g.n(); ++v) {
    for (VertexId w : g.Neighbors(v)) s.adj[v] |= 1u << w;
  }
  s.assign.assign(static_cast<std::size_t>(s.n), 0);
  s.Run(0, 0u, 0);
  out.cost = s.best;
  out.partitions_examined = s.examined;
  out.witness = Clustering::FromIds(
      std::vector<ClusterId>(s.best_assign.begin(), s.best_assign.end()));
  return out;
}

std::vector<BadTriangle> BadTriangles(const Graph& g) {
  std::vector<BadTriangle> out;
  for (VertexId y = 0; y < g.n(); ++y) {
    auto nb = g.Neighbors(y);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.HasEdge(nb[i], nb[j])) continue;
        std::array<VertexId, 3> t{nb[i], nb[j], y};
        std::sort(t.begin(), t.end());
        out.push_back({t[0], t[1], t[2], y});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const BadTriangle& x,
                                       const BadTriangle& y) {
    return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
  });
  return out;
}

TrianglePacking GreedyTrianglePacking(const Graph& g, std::uint64_t seed) {
  std::vector<BadTriangle> all = BadTriangles(g);
  Rng rng = MakeRng(seed);
  Shuffle(std::span<BadTriangle>(all), rng);
  std::unordered_set<std::uint64_t> used;
  TrianglePacking out;
  for (const BadTriangle& t : all) {
    const std::uint64_t k1 = PairKey(t.a, t.b);
    const std::uint64_t k2 = PairKey(t.b, t.c);
    const std::uint64_t k3 = PairKey(t.a, t.c);
    if (used.count(k1) || used.count(k2) || used.count(k3)) continue;
    used.insert({k1, k2, k3});
    out.triangles.push_back(t);
  }
  out.count = static_cast<std::int64_t>(out.triangles.size());
  return out;
}

void ForEachPermutation(VertexId n,
                        const std::function<void(const RankAssignment&)>& fn) {
  if (n < 0 || n > kMaxExhaustiveN) {
    throw std::invalid_argument("exhaustive permutation mode supports n <= " +
                                std::to_string(kMaxExhaustiveN));
  }
  std::vector<std::uint32_t> rank(static_cast<std::size_t>(n));
  std::iota(rank.begin(), rank.end(), 0u);
  do {
    fn(RankAssignment::FromPermutation(rank));
  } while (std::next_permutation(rank.begin(), rank.end()));
}

namespace {

std::int64_t RunCost(const Graph& g, const AlgorithmSpec& spec,
                     const RankAssignment& pi) {
  switch (spec.algorithm) {
    case Algorithm::kPivot:
      return ClusteringCost(g, SequentialPivot(g, pi).clustering);
    case Algorithm::kRPivot:
      return ClusteringCost(g, RPivot(g, pi, spec.rounds).clustering);
    case Algorithm::kRPivotVariant:
      return ClusteringCost(g, RPivotVariant(g, pi, spec.rounds).clustering);
  }
  return 0;
}

}  // namespace

CostEstimate ExpectedCostMC(const Graph& g, const AlgorithmSpec& spec,
                            std::int64_t trials, std::uint64_t seed,
                            int threads) {
  if (trials < 2) throw std::invalid_argument("Monte-Carlo needs trials >= 2");
  std::vector<std::int64_t> cost(static_cast<std::size_t>(trials));
  ForEachTrial(trials, threads, [&](std::int64_t t) {
    Rng rng = MakeRng(seed, static_cast<std::uint64_t>(t));
    const RankAssignment pi =
        spec.algorithm == Algorithm::kRPivotVariant
            ? RandomIntegerRanks(g.n(), spec.exponent, rng)
            : RandomPermutation(g.n(), rng);
    cost[t] = RunCost(g, spec, pi);
  });
  RunningStats stats;
  for (std::int64_t c : cost) stats.Add(static_cast<double>(c));
  return {stats.mean(), stats.stderr_mean(), trials, false};
}

CostEstimate ExpectedCostExhaustive(const Graph& g, const AlgorithmSpec& spec) {
  if (spec.algorithm == Algorithm::kRPivotVariant) {
    throw std::invalid_argument(
        "exhaustive mode enumerates permutations, not integer ranks");
  }
  RunningStats stats;
  ForEachPermutation(g.n(), [&](const RankAssignment& pi) {
    stats.Add(static_cast<double>(RunCost(g, spec, pi)));
  });
  return {stats.mean(), 0.0, stats.count(), true};
}

RatioSample SampleRatio(const Graph& g, int r,
                        std::optional<std::int64_t> trials,
                        std::uint64_t seed, int threads) {
  RatioSample out;
  struct Row {
    std::int64_t pivot = 0, rpivot = 0, extra = 0;
  };
  auto one = [&](const RankAssignment& pi) {
    ExtraMistakes x = ComputeExtraMistakes(g, pi, r);
    return Row{ClusteringCost(g, x.pivot.clustering),
               ClusteringCost(g, x.rpivot.clustering),
               static_cast<std::int64_t>(x.pairs.size())};
  };
  std::vector<Row> rows;
  if (!trials) {
    out.exhaustive = true;
    ForEachPermutation(g.n(),
                       [&](const RankAssignment& pi) { rows.push_back(one(pi)); });
  } else {
    if (*trials < 2) throw std::invalid_argument("sampling needs trials >= 2");
    rows.resize(static_cast<std::size_t>(*trials));
    ForEachTrial(*trials, threads, [&](std::int64_t t) {
      Rng rng = MakeRng(seed, static_cast<std::uint64_t>(t));
      rows[t] = one(RandomPermutation(g.n(), rng));
    });
  }
  for (const Row& row : rows) {
    out.pivot_cost.Add(static_cast<double>(row.pivot));
    out.rpivot_cost.Add(static_cast<double>(row.rpivot));
    out.extra_mistakes.Add(static_cast<double>(row.extra));
  }
  out.trials = static_cast<std::int64_t>(rows.size());
  return out;
}

}  // namespace rpivot
