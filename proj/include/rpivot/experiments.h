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


// Lower-bound constructions run end to end: the clique-plus-path instance
// under its adversarial order, and Monte-Carlo pivot-set sizes on the line
// graph of the layered host.

#ifndef RPIVOT_EXPERIMENTS_H_
#define RPIVOT_EXPERIMENTS_H_

#include <cstdint>
#include <vector>

#include "rpivot/generators.h"
#include "rpivot/pivot.h"
#include "rpivot/stats.h"

namespace rpivot {

struct CliquePathReport {
  VertexId clique_size = 0;
  int rounds = 0;
  VertexId n = 0;
  std::int64_t rpivot_cost = 0;
  // Clique as one cluster, path vertices as singletons.
  std::int64_t witness_cost = 0;
  double ratio = 0.0;  // rpivot_cost / witness_cost
  // N(N-1) / (2(2r+1)), the growth rate the ratio should track.
  double reference = 0.0;
  std::vector<VertexId> pivots;
  std::int64_t unsettled = 0;
  Metadata metadata;
};

CliquePathReport RunCliquePath(VertexId clique_size, int rounds);

struct LayeredPoint {
  LayeredParams params;
  std::int64_t trials = 0;
  RunningStats full;       // |P_PIV|
  RunningStats truncated;  // |P_rPIV|
  double ratio = 0.0;      // mean truncated / mean full
  double ratio_stderr = 0.0;  // delta method, including the covariance
};

// Trial t shuffles the host edges with MakeRng(seed, t) and counts both
// pivot sets on the line graph without materializing it.
LayeredPoint RunLayeredPoint(int rounds, std::int64_t requested_top,
                             std::int64_t trials, std::uint64_t seed,
                             std::int64_t edge_budget = kDefaultEdgeBudget,
                             int threads = 1);

}  // namespace rpivot

#endif  // RPIVOT_EXPERIMENTS_H_
