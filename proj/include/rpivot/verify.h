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


// Exact invariant checks shared by the CLI `verify` command and the test
// suites. Each Check* function returns an empty string on success and a
// description of the first violation otherwise; Run*Suite functions loop them
// over generated instances and attach a reproducer to the first failure.

#ifndef RPIVOT_VERIFY_H_
#define RPIVOT_VERIFY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "rpivot/executors.h"
#include "rpivot/graph.h"
#include "rpivot/oracle.h"
#include "rpivot/rank.h"

namespace rpivot {

// Refinement, shared pivots, pivot nesting, X ⊆ E, cost(rPiv) <= cost(Piv) +
// |X|, monotone truncation (r vs r+1), settled / singleton invariants.
std::string CheckPivotInvariants(const Graph& g, const RankAssignment& pi,
                                 int r);

// Sequential and parallel Pivot agree on pivots and clustering; the pivots
// form a maximal independent set and p_v is the lowest pivot in N[v].
std::string CheckPivotFormulations(const Graph& g, const RankAssignment& pi);

// Vertex oracle (memoized and traced) against pivot membership.
std::string CheckVertexOracle(QueryContext& ctx);
// Pair oracle on every extra mistake against "common pivot is an endpoint".
std::string CheckPairOracle(QueryContext& ctx, const ExtraMistakes& x);

// Stack claims for one (g, pi, r): every extra mistake's pair trace reaches
// 2r, every stack path is a descending query path, every charge is a bad
// triangle; every vertex unsettled after t <= r rounds has a trace reaching
// 2t; direct-query sets of all vertices and extra mistakes match the
// characterization.
std::string CheckStackClaims(QueryContext& ctx, const ExtraMistakes& x,
                             int r);

struct ExecutorCheckOptions {
  int stream_shuffles = 10;
  std::vector<double> deltas = {0.3, 0.5};
  int rank_exponent = 3;
  LocalOptions local;
};

// Streaming vs r-Pivot (shuffled streams, 2r+1 passes, <= 6n words); LOCAL,
// MPC and LCA vs r-Pivot-Variant with their resource bounds.
std::string CheckExecutors(const Graph& g, int r, std::uint64_t seed,
                           const ExecutorCheckOptions& options = {});

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::int64_t instances = 0;
  std::string failure;     // empty when passed
  std::string reproducer;  // graph text plus seed / r
};

// Graph text (module format) plus the parameters, for failure reports.
std::string Reproducer(const Graph& g, std::uint64_t seed, int r,
                       const std::string& extra = {});

// One representative per isomorphism class of graphs on n <= 7 vertices.
std::vector<Graph> GraphsUpToIsomorphism(VertexId n);

// Random ER instances: n in [n_lo, n_hi], p in {0.2, 0.5, 0.8}, r in
// {1, 2, 3}, all derived from (seed, trial).
struct RandomInstance {
  Graph graph;
  RankAssignment pi;
  int r = 1;
  std::uint64_t seed = 0;
};
RandomInstance MakeRandomInstance(std::uint64_t seed, std::int64_t trial,
                                  VertexId n_lo, VertexId n_hi);

SuiteResult RunInvariantSuite(std::int64_t trials, std::uint64_t seed);
// Random trials plus, when exhaustive_n >= 1, every graph up to isomorphism
// on at most exhaustive_n vertices under every permutation and r in {1,2,3}.
SuiteResult RunOracleSuite(std::int64_t trials, std::uint64_t seed,
                           VertexId exhaustive_n);
SuiteResult RunExecutorSuite(std::int64_t trials, std::uint64_t seed,
                             const ExecutorCheckOptions& options = {});

}  // namespace rpivot

#endif  // RPIVOT_VERIFY_H_
