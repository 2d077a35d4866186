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


// Vertex and pair query oracles for the greedy MIS, with literal tracing of
// the recursive-call stack, the stack paths built from those traces, and the
// bad-triangle charging of extra mistakes.
//
//   Vertex(v): for w in N(v) below v in increasing rank,
//              if Vertex(w) = 1 return 0; return 1.
//   Pair(u,v): same loop over N(u) ∪ N(v) below min(u, v).
//
// The traced stack holds the active Vertex calls below the root query; the
// root itself is never on it.

#ifndef RPIVOT_ORACLE_H_
#define RPIVOT_ORACLE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rpivot/graph.h"
#include "rpivot/pivot.h"
#include "rpivot/rank.h"
#include "rpivot/random.h"
#include "rpivot/stats.h"

namespace rpivot {

inline constexpr std::int64_t kDefaultQueryBudget = 10'000'000;

// Thrown when a traced oracle call exceeds its direct-query budget.
class QueryBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Per-(g, pi) lookup tables: neighbors sorted by rank, the memoized boolean
// oracle, and the Pivot run that the oracle answers agree with.
class QueryContext {
 public:
  // Requires a permutation covering g.
  QueryContext(const Graph& g, const RankAssignment& pi);

  const Graph& graph() const { return *g_; }
  const RankAssignment& pi() const { return *pi_; }
  const PivotRun& pivot_run() const { return run_; }

  // N(v) in increasing rank.
  std::span<const VertexId> SortedNeighbors(VertexId v) const;
  // The prefix of SortedNeighbors(v) ranked below v.
  std::span<const VertexId> Lower(VertexId v) const;
  // Candidates of Pair(u, v): N(u) ∪ N(v) below min(u, v), increasing rank,
  // each vertex once.
  std::vector<VertexId> PairCandidates(VertexId u, VertexId v) const;

  // Memoized Vertex(v). Computed by its own recursion, not read off the
  // Pivot run, so the two can be cross-checked.
  bool IsPivot(VertexId v);
  // Memoized Pair(u, v).
  bool PairValue(VertexId u, VertexId v);

  // Vertices that Vertex(v) / Pair(u, v) call directly, in call order.
  std::vector<VertexId> DirectQueries(VertexId v);
  std::vector<VertexId> DirectQueriesPair(VertexId u, VertexId v);

 private:
  const Graph* g_;
  const RankAssignment* pi_;
  PivotRun run_;
  std::vector<std::int64_t> offsets_;
  std::vector<VertexId> sorted_;
  std::vector<std::int32_t> lower_count_;
  std::vector<signed char> memo_;  // -1 unknown
};

struct TraceOptions {
  // Stop the first time the stack holds this many elements.
  std::optional<int> stack_limit;
  // Record every push/pop (memory grows with the number of calls).
  bool record_events = false;
  std::int64_t query_budget = kDefaultQueryBudget;
};

struct QueryTrace {
  // Encoded events: v >= 0 pushes v, -1 pops the top.
  std::vector<VertexId> events;
  // first_stack[l-1]: the stack the first time it held l elements.
  std::vector<std::vector<VertexId>> first_stack;
  // Calls made directly by the root, in order.
  std::vector<VertexId> root_queries;
  bool result = false;  // meaningless when truncated_at is set
  std::int64_t direct_query_count = 0;
  int max_stack = 0;
  std::optional<int> truncated_at;

  // Materializes the stack after every event.
  std::vector<std::vector<VertexId>> Snapshots() const;
};

// Literal unmemoized recursion with an explicit frame stack. Throws
// QueryBudgetExceeded past options.query_budget direct queries.
QueryTrace TraceVertex(const QueryContext& ctx, VertexId v,
                       const TraceOptions& options = {});
QueryTrace TraceVertex(const Graph& g, const RankAssignment& pi, VertexId v,
                       const TraceOptions& options = {});
QueryTrace TracePair(const QueryContext& ctx, VertexId u, VertexId v,
                     const TraceOptions& options = {});
QueryTrace TracePair(const Graph& g, const RankAssignment& pi, VertexId u,
                     VertexId v, const TraceOptions& options = {});

// Expected direct-query sets of the four cases of the query characterization
// (pivot / non-pivot vertex, pair whose common pivot is / is not an
// endpoint), derived from the Pivot run alone.
std::vector<VertexId> ExpectedDirectQueries(const QueryContext& ctx,
                                            VertexId v);
// {u, v} must be an edge whose endpoints share their Pivot pivot.
std::vector<VertexId> ExpectedDirectQueriesPair(const QueryContext& ctx,
                                                VertexId u, VertexId v);

// Checks a vertex or pair query set against the characterization: the set
// matches, and the pivots it contains are exactly none (pivot vertex, or pair
// whose common pivot is an endpoint) or exactly the relevant pivot.
// Returns an empty string on success, a description otherwise.
std::string CheckDirectQueries(const QueryContext& ctx, VertexId v,
                               std::span<const VertexId> queried);
std::string CheckDirectQueriesPair(const QueryContext& ctx, VertexId u,
                                   VertexId v,
                                   std::span<const VertexId> queried);

struct StackPath {
  std::vector<VertexId> vertices;  // ell + 2 vertices
  int ell = 0;
  VertexId u = kNoVertex;  // the source pair, u < v
  VertexId v = kNoVertex;
  // Both endpoints directly query the first stack vertex; the order of u, v
  // then follows the descending-rank rule.
  bool both_query_first = false;
};

// Stack path for the pair at size `ell`. Throws InvariantViolation if the
// pair-oracle stack never reaches `ell`.
StackPath BuildStackPath(QueryContext& ctx, VertexId u, VertexId v, int ell,
                         std::int64_t query_budget = kDefaultQueryBudget);
// All stack paths for ell in [2, max_ell] from a single trace.
std::vector<StackPath> BuildStackPaths(
    QueryContext& ctx, VertexId u, VertexId v, int max_ell,
    std::int64_t query_budget = kDefaultQueryBudget);

struct Triangle {
  VertexId a = 0, b = 0, c = 0;  // last three vertices of the path, in order
};

struct ChargeRecord {
  VertexId u = 0, v = 0;
  int ell = 0;
  Triangle triangle;
};

// Exactly two of the three pairs are edges.
bool IsBadTriangle(const Graph& g, VertexId a, VertexId b, VertexId c);

// Charges the bad triangle at the end of the stack path. Throws
// InvariantViolation if it is not bad.
ChargeRecord ChargeFromPath(const Graph& g, const StackPath& path);
ChargeRecord Charge(QueryContext& ctx, VertexId u, VertexId v, int ell);

struct ChargingRoundResult {
  int ell = 0;
  std::vector<ChargeRecord> charges;
};

// Samples one ell uniformly from [2, 2r] for all pairs and charges every
// extra mistake.
ChargingRoundResult ChargingRound(const Graph& g, const RankAssignment& pi,
                                  int r, Rng& rng);
ChargingRoundResult ChargingRound(QueryContext& ctx,
                                  const ExtraMistakes& mistakes, int r,
                                  Rng& rng);

struct PairWidth {
  VertexId a = 0, b = 0;  // a < b
  bool is_edge = false;
  double mean_charges = 0.0;
  double stderr_charges = 0.0;
  // |R(a,b)| and |R(b,a)| per permutation, counted over all ell.
  double mean_r_ab = 0.0, stderr_r_ab = 0.0;
  double mean_r_ba = 0.0, stderr_r_ba = 0.0;
  // (|R(a,b)| + |R(b,a)|) / (2r - 1): the charge expectation over ell.
  double mean_r_width = 0.0, stderr_r_width = 0.0;
};

struct WidthStudyResult {
  int rounds = 0;
  std::int64_t trials = 0;
  std::vector<PairWidth> pairs;  // every unordered pair, lexicographic
  std::vector<std::int64_t> ell_histogram;  // index ell - 2
  RunningStats mistakes;                    // |X| per trial
};

// Permutation of trial i is drawn from MakeRng(seed, i).
WidthStudyResult WidthStudy(const Graph& g, int r, std::int64_t trials,
                            std::uint64_t seed);

std::string WidthStudyCsv(const WidthStudyResult& result);

}  // namespace rpivot

#endif  // RPIVOT_ORACLE_H_
