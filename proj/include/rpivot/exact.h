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


// Ground truth for small instances: optimal clustering cost by partition
// enumeration, bad triangles and a packing lower bound, and exact or sampled
// expectations over rank orders.

#ifndef RPIVOT_EXACT_H_
#define RPIVOT_EXACT_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rpivot/clustering.h"
#include "rpivot/graph.h"
#include "rpivot/rank.h"
#include "rpivot/stats.h"

namespace rpivot {

struct OptResult {
  std::int64_t cost = 0;
  Clustering witness;
  // Complete partitions whose cost was evaluated (branch and bound skips
  // subtrees that cannot beat the incumbent).
  std::int64_t partitions_examined = 0;
};

inline constexpr VertexId kDefaultOptGuard = 13;

// Restricted-growth-string enumeration with incremental cost. Throws
// std::invalid_argument when n > max_n (at most 30).
OptResult BruteForceOpt(const Graph& g, VertexId max_n = kDefaultOptGuard);

struct BadTriangle {
  VertexId a = 0, b = 0, c = 0;  // a < b < c
  VertexId center = 0;           // the vertex adjacent to the other two
};

// Every bad triangle once, sorted by (a, b, c).
std::vector<BadTriangle> BadTriangles(const Graph& g);

struct TrianglePacking {
  std::int64_t count = 0;
  std::vector<BadTriangle> triangles;
};

// Greedy over shuffled bad triangles, keeping one only if none of its three
// vertex pairs is used by an earlier kept triangle. Any clustering errs on a
// pair of every bad triangle, and kept triangles have disjoint pairs, so the
// count is a lower bound on the optimal cost.
TrianglePacking GreedyTrianglePacking(const Graph& g, std::uint64_t seed);

inline constexpr VertexId kMaxExhaustiveN = 8;

// Calls fn on every permutation of [0, n), n <= kMaxExhaustiveN, in
// lexicographic order of the rank vector.
void ForEachPermutation(VertexId n,
                        const std::function<void(const RankAssignment&)>& fn);

enum class Algorithm { kPivot, kRPivot, kRPivotVariant };

struct AlgorithmSpec {
  Algorithm algorithm = Algorithm::kPivot;
  int rounds = 1;  // ignored for kPivot
  int exponent = 3;  // rank exponent for kRPivotVariant
};

struct CostEstimate {
  double mean = 0.0;
  double stderr_mean = 0.0;
  std::int64_t trials = 0;
  bool exhaustive = false;
};

// Monte-Carlo over fresh rank draws; trial i uses MakeRng(seed, i).
CostEstimate ExpectedCostMC(const Graph& g, const AlgorithmSpec& spec,
                            std::int64_t trials, std::uint64_t seed,
                            int threads = 1);
// Exact average over all n! permutations (kPivot, kRPivot only).
CostEstimate ExpectedCostExhaustive(const Graph& g, const AlgorithmSpec& spec);

// Joint per-permutation statistics of Pivot and r-Pivot on the same order.
struct RatioSample {
  RunningStats pivot_cost;
  RunningStats rpivot_cost;
  RunningStats extra_mistakes;  // |X|
  std::int64_t trials = 0;
  bool exhaustive = false;
};

// trials == nullopt enumerates all permutations.
RatioSample SampleRatio(const Graph& g, int r,
                        std::optional<std::int64_t> trials,
                        std::uint64_t seed, int threads = 1);

}  // namespace rpivot

#endif  // RPIVOT_EXACT_H_
