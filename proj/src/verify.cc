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


#include "rpivot/verify.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rpivot/clustering.h"
#include "rpivot/exact.h"
#include "rpivot/generators.h"
#include "rpivot/graph_io.h"
#include "rpivot/pivot.h"
#include "rpivot/random.h"

namespace rpivot {

namespace {

std::string Pair(VertexId u, VertexId v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

bool Contains(std::span<const VertexId> list, VertexId x) {
  return std::find(list.begin(), list.end(), x) != list.end();
}

// Same canonical clustering and same cluster pivots.
std::string CompareResult(const std::string& who,
                          std::span<const VertexId> ref_pivot,
                          const Clustering& ref, const ExecutorResult& got) {
  if (got.clustering.n() != ref.n()) {
    return who + " clustering has the wrong size";
  }
  for (VertexId u = 0; u < ref.n(); ++u) {
    for (VertexId v = u + 1; v < ref.n(); ++v) {
      if ((ref[u] == ref[v]) != (got.clustering[u] == got.clustering[v])) {
        return who + " clustering differs from the reference on pair " +
               Pair(u, v);
      }
    }
  }
  for (VertexId v = 0; v < ref.n(); ++v) {
    if (ref_pivot[v] != got.cluster_pivot[v]) {
      return who + " cluster pivot of vertex " + std::to_string(v) +
             " differs from the reference";
    }
  }
  return {};
}

}  // namespace

std::string CheckPivotInvariants(const Graph& g, const RankAssignment& pi,
                                 int r) {
  ExtraMistakes x;
  try {
    x = ComputeExtraMistakes(g, pi, r);
  } catch (const InvariantViolation& e) {
    return e.what();
  }
  const PivotRun& piv = x.pivot;
  const RPivotState& rp = x.rpivot;
  const VertexId n = g.n();

  if (!IsRefinement(rp.clustering, piv.clustering)) {
    return "r-Pivot clustering does not refine Pivot's";
  }
  for (VertexId v = 0; v < n; ++v) {
    const VertexId p = rp.cluster_pivot[v];
    if (p == kNoVertex) continue;
    if (!rp.is_pivot[p] || !piv.is_pivot[p] || piv.pivot_of[v] != p) {
      return "vertex " + std::to_string(v) + " sits with r-Pivot pivot " +
             std::to_string(p) + " but its Pivot pivot is " +
             std::to_string(piv.pivot_of[v]);
    }
  }
  for (VertexId p : rp.pivots) {
    if (!piv.is_pivot[p]) {
      return "r-Pivot pivot " + std::to_string(p) + " is not a Pivot pivot";
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    bool near_pivot = rp.is_pivot[v] != 0;
    for (VertexId w : g.Neighbors(v)) near_pivot = near_pivot || rp.is_pivot[w];
    if (static_cast<bool>(rp.settled[v]) != near_pivot) {
      return "vertex " + std::to_string(v) +
             " settled flag disagrees with pivot adjacency";
    }
    if (!rp.settled[v] && rp.cluster_pivot[v] != kNoVertex) {
      return "unsettled vertex " + std::to_string(v) + " is not a singleton";
    }
  }

  // Extra mistakes against a direct comparison of the two clusterings.
  std::vector<std::uint64_t> listed;
  for (const ExtraMistake& m : x.pairs) listed.push_back(PairKey(m.u, m.v));
  std::sort(listed.begin(), listed.end());
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      const bool edge = g.HasEdge(a, b);
      const bool piv_wrong = (piv.clustering[a] == piv.clustering[b]) != edge;
      const bool rp_wrong = (rp.clustering[a] == rp.clustering[b]) != edge;
      const bool extra = rp_wrong && !piv_wrong;
      if (extra && !edge) return "extra mistake on non-edge " + Pair(a, b);
      if (extra != std::binary_search(listed.begin(), listed.end(),
                                      PairKey(a, b))) {
        return "extra-mistake set disagrees with clustering diff at " +
               Pair(a, b);
      }
    }
  }
  const std::int64_t cost_piv = ClusteringCost(g, piv.clustering);
  const std::int64_t cost_rp = ClusteringCost(g, rp.clustering);
  if (cost_rp > cost_piv + static_cast<std::int64_t>(x.pairs.size())) {
    return "cost(r-Pivot)=" + std::to_string(cost_rp) + " > cost(Pivot)=" +
           std::to_string(cost_piv) + " + |X|=" +
           std::to_string(x.pairs.size());
  }
  const RPivotState next = RPivot(g, pi, r + 1);
  for (VertexId p : rp.pivots) {
    if (!next.is_pivot[p]) {
      return "pivot " + std::to_string(p) + " of " + std::to_string(r) +
             "-Pivot is missing after " + std::to_string(r + 1) + " rounds";
    }
  }
  return {};
}

std::string CheckPivotFormulations(const Graph& g, const RankAssignment& pi) {
  const PivotRun seq = SequentialPivot(g, pi);
  const PivotRun par = ParallelPivotFull(g, pi);
  if (seq.pivots != par.pivots) return "parallel and sequential pivots differ";
  if (seq.clustering != par.clustering) {
    return "parallel and sequential clusterings differ";
  }
  if (seq.pivot_of != par.pivot_of) return "pivot assignments differ";
  for (VertexId v = 0; v < g.n(); ++v) {
    VertexId lowest = seq.is_pivot[v] ? v : kNoVertex;
    for (VertexId w : g.Neighbors(v)) {
      if (seq.is_pivot[v] && seq.is_pivot[w]) {
        return "adjacent pivots " + Pair(v, w);
      }
      if (seq.is_pivot[w] && (lowest == kNoVertex || pi.Less(w, lowest))) {
        lowest = w;
      }
    }
    if (lowest == kNoVertex) {
      return "pivot set is not maximal at " + std::to_string(v);
    }
    if (seq.pivot_of[v] != lowest) {
      return "p_v of " + std::to_string(v) + " is not the lowest pivot in N[v]";
    }
  }
  return {};
}

std::string CheckVertexOracle(QueryContext& ctx) {
  const PivotRun& run = ctx.pivot_run();
  for (VertexId v = 0; v < ctx.graph().n(); ++v) {
    const bool expected = run.is_pivot[v] != 0;
    if (ctx.IsPivot(v) != expected) {
      return "memoized vertex oracle wrong at " + std::to_string(v);
    }
    const QueryTrace trace = TraceVertex(ctx, v);
    if (trace.result != expected) {
      return "traced vertex oracle wrong at " + std::to_string(v);
    }
    if (trace.root_queries != ctx.DirectQueries(v)) {
      return "traced and memoized direct queries of " + std::to_string(v) +
             " differ";
    }
  }
  return {};
}

std::string CheckPairOracle(QueryContext& ctx, const ExtraMistakes& x) {
  for (const ExtraMistake& m : x.pairs) {
    const bool expected = m.common_pivot == m.u || m.common_pivot == m.v;
    if (ctx.PairValue(m.u, m.v) != expected) {
      return "memoized pair oracle wrong at " + Pair(m.u, m.v);
    }
    const QueryTrace trace = TracePair(ctx, m.u, m.v);
    if (trace.result != expected) {
      return "traced pair oracle wrong at " + Pair(m.u, m.v);
    }
    if (trace.root_queries != ctx.DirectQueriesPair(m.u, m.v)) {
      return "traced and memoized direct queries of " + Pair(m.u, m.v) +
             " differ";
    }
  }
  return {};
}

std::string CheckStackClaims(QueryContext& ctx, const ExtraMistakes& x,
                             int r) {
  const Graph& g = ctx.graph();
  const RankAssignment& pi = ctx.pi();
  try {
    for (VertexId v = 0; v < g.n(); ++v) {
      const std::vector<VertexId> q = ctx.DirectQueries(v);
      if (std::string err = CheckDirectQueries(ctx, v, q); !err.empty()) {
        return err;
      }
    }
    for (const ExtraMistake& m : x.pairs) {
      const std::vector<VertexId> q = ctx.DirectQueriesPair(m.u, m.v);
      if (std::string err = CheckDirectQueriesPair(ctx, m.u, m.v, q);
          !err.empty()) {
        return err;
      }
      const std::vector<StackPath> paths =
          BuildStackPaths(ctx, m.u, m.v, 2 * r);
      for (const StackPath& path : paths) {
        const auto& w = path.vertices;
        if (w.size() != static_cast<std::size_t>(path.ell) + 2) {
          return "stack path of " + Pair(m.u, m.v) + " has wrong length";
        }
        for (std::size_t i = 1; i < w.size(); ++i) {
          if (!g.HasEdge(w[i - 1], w[i])) {
            return "stack path of " + Pair(m.u, m.v) + " breaks at " +
                   Pair(w[i - 1], w[i]);
          }
          if (i >= 2) {
            if (!pi.Less(w[i], w[i - 1])) {
              return "stack path of " + Pair(m.u, m.v) +
                     " does not descend in rank at position " +
                     std::to_string(i + 1);
            }
            if (!Contains(ctx.DirectQueries(w[i - 1]), w[i])) {
              return "stack path of " + Pair(m.u, m.v) + ": " +
                     std::to_string(w[i - 1]) + " does not query " +
                     std::to_string(w[i]);
            }
          }
        }
        ChargeFromPath(g, path);
      }
    }
    for (int t = 1; t <= r; ++t) {
      const RPivotState state = RPivot(g, pi, t);
      for (VertexId w : state.unsettled_after) {
        TraceOptions opt;
        opt.stack_limit = 2 * t;
        const QueryTrace trace = TraceVertex(ctx, w, opt);
        if (trace.max_stack < 2 * t) {
          return "vertex " + std::to_string(w) + " unsettled after " +
                 std::to_string(t) + " rounds, but its trace peaks at " +
                 std::to_string(trace.max_stack);
        }
      }
    }
  } catch (const InvariantViolation& e) {
    return e.what();
  } catch (const QueryBudgetExceeded& e) {
    return e.what();
  }
  return {};
}

std::string CheckExecutors(const Graph& g, int r, std::uint64_t seed,
                           const ExecutorCheckOptions& options) {
  const VertexId n = g.n();
  Rng rng = MakeRng(seed, 0x5eed);
  try {
    const RankAssignment pi = RandomPermutation(n, rng);
    const RPivotState ref = RPivot(g, pi, r);
    std::vector<Edge> edges = g.Edges();
    for (int s = 0; s < options.stream_shuffles; ++s) {
      Shuffle(std::span<Edge>(edges), rng);
      for (Edge& e : edges) {
        if (UniformBelow(rng, 2)) std::swap(e.u, e.v);
      }
      VectorEdgeStream stream(edges);
      const ExecutorResult res = StreamingExecute(stream, n, pi, r);
      if (auto err = CompareResult("streaming", ref.cluster_pivot,
                                   ref.clustering, res);
          !err.empty()) {
        return err + " (shuffle " + std::to_string(s) + ")";
      }
      if (res.report.passes_or_rounds != 2 * r + 1) {
        return "streaming used " + std::to_string(res.report.passes_or_rounds) +
               " passes";
      }
      if (res.report.peak_memory_words > 6LL * n) {
        return "streaming used " +
               std::to_string(res.report.peak_memory_words) + " words";
      }
    }

    const RankAssignment ranks =
        RandomIntegerRanks(n, options.rank_exponent, rng);
    const RPivotState refv = RPivotVariant(g, ranks, r);
    const ExecutorResult local = LocalExecute(g, ranks, r, options.local);
    if (auto err = CompareResult("LOCAL", refv.cluster_pivot, refv.clustering,
                                 local);
        !err.empty()) {
      return err;
    }
    if (local.report.passes_or_rounds != 2 * r + 1) {
      return "LOCAL used " + std::to_string(local.report.passes_or_rounds) +
             " rounds";
    }
    const std::int64_t log_n =
        n > 1 ? static_cast<std::int64_t>(BitWidth(static_cast<uint128>(n)))
              : 0;
    if (local.report.max_message_bits > options.rank_exponent * log_n + 8) {
      return "LOCAL message of " +
             std::to_string(local.report.max_message_bits) + " bits";
    }

    for (double delta : options.deltas) {
      if (MpcCapacity(n, delta) < 2) continue;  // rejected by design
      const ExecutorResult mpc = MpcExecute(g, ranks, r, delta);
      if (auto err = CompareResult("MPC", refv.cluster_pivot, refv.clustering,
                                   mpc);
          !err.empty()) {
        return err + " (delta " + std::to_string(delta) + ")";
      }
      if (mpc.report.max_machine_load_words >
          mpc.report.machine_capacity_words) {
        return "MPC machine over capacity";
      }
    }

    ProbeOracle oracle(g);
    std::vector<VertexId> cluster_pivot(static_cast<std::size_t>(n),
                                        kNoVertex);
    for (VertexId v = 0; v < n; ++v) {
      const LcaAnswer a = LcaQuery(oracle, ranks, r, v);
      const std::int64_t bound = BallProbeBound(g, v, 2 * r + 2);
      if (a.report.probes > bound) {
        return "LCA query of " + std::to_string(v) + " used " +
               std::to_string(a.report.probes) + " probes, ball bound " +
               std::to_string(bound);
      }
      if (a.pivot) cluster_pivot[v] = v;
      else if (a.cluster != v) cluster_pivot[v] = a.cluster;
    }
    if (cluster_pivot != refv.cluster_pivot) {
      return "LCA answers disagree with the reference";
    }
  } catch (const std::exception& e) {
    return std::string("executor error: ") + e.what();
  }
  return {};
}

std::string Reproducer(const Graph& g, std::uint64_t seed, int r,
                       const std::string& extra) {
  std::ostringstream out;
  out << "# seed=" << seed << " r=" << r;
  if (!extra.empty()) out << ' ' << extra;
  out << '\n';
  WriteGraphText(out, g);
  return out.str();
}

std::vector<Graph> GraphsUpToIsomorphism(VertexId n) {
  if (n < 0 || n > 7) {
    throw std::invalid_argument("isomorphism classes supported for n <= 7");
  }
  std::vector<Edge> pairs;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) pairs.push_back({a, b});
  }
  const std::size_t k = pairs.size();
  auto index = [&](VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    // Position of (a, b) in the lexicographic pair list.
    return static_cast<std::size_t>(a * (2 * n - a - 1) / 2 + (b - a - 1));
  };
  // Edge-index image of every relabeling.
  std::vector<std::vector<std::uint8_t>> images;
  std::vector<VertexId> perm(static_cast<std::size_t>(n));
  for (VertexId i = 0; i < n; ++i) perm[i] = i;
  do {
    std::vector<std::uint8_t> img(k);
    for (std::size_t e = 0; e < k; ++e) {
      img[e] = static_cast<std::uint8_t>(
          index(perm[pairs[e].u], perm[pairs[e].v]));
    }
    images.push_back(std::move(img));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<char> seen(std::size_t{1} << k, 0);
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    if (seen[mask]) continue;
    for (const auto& img : images) {
      std::uint32_t m = 0;
      for (std::size_t e = 0; e < k; ++e) {
        if (mask >> e & 1u) m |= 1u << img[e];
      }
      seen[m] = 1;
    }
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < k; ++e) {
      if (mask >> e & 1u) edges.push_back(pairs[e]);
    }
    out.push_back(Graph::Build(n, edges));
  }
  return out;
}

RandomInstance MakeRandomInstance(std::uint64_t seed, std::int64_t trial,
                                  VertexId n_lo, VertexId n_hi) {
  static constexpr double kDensities[] = {0.2, 0.5, 0.8};
  Rng rng = MakeRng(seed, static_cast<std::uint64_t>(trial));
  RandomInstance out;
  const VertexId n = n_lo + static_cast<VertexId>(UniformBelow(
                                rng, static_cast<std::uint64_t>(n_hi - n_lo + 1)));
  const double p = kDensities[UniformBelow(rng, 3)];
  out.r = 1 + static_cast<int>(UniformBelow(rng, 3));
  out.seed = rng();
  out.graph = ErdosRenyi(n, p, out.seed);
  out.pi = RandomPermutation(n, rng);
  return out;
}

namespace {

void Fail(SuiteResult& result, const std::string& what, const Graph& g,
          std::uint64_t seed, int r, const std::string& extra) {
  result.passed = false;
  result.failure = what;
  result.reproducer = Reproducer(g, seed, r, extra);
}

std::string OracleChecks(const Graph& g, const RankAssignment& pi, int r) {
  QueryContext ctx(g, pi);
  const ExtraMistakes x = ComputeExtraMistakes(g, pi, r);
  if (auto err = CheckVertexOracle(ctx); !err.empty()) return err;
  if (auto err = CheckPairOracle(ctx, x); !err.empty()) return err;
  return CheckStackClaims(ctx, x, r);
}

std::string RankString(const RankAssignment& pi) {
  std::string out = "pi=";
  for (VertexId v = 0; v < pi.n(); ++v) {
    out += (v ? "," : "") + ToDecimal(pi.raw(v));
  }
  return out;
}

}  // namespace

SuiteResult RunInvariantSuite(std::int64_t trials, std::uint64_t seed) {
  SuiteResult result;
  result.name = "invariants";
  for (std::int64_t t = 0; t < trials; ++t) {
    const RandomInstance inst = MakeRandomInstance(seed, t, 1, 50);
    ++result.instances;
    std::string err = CheckPivotFormulations(inst.graph, inst.pi);
    if (err.empty()) err = CheckPivotInvariants(inst.graph, inst.pi, inst.r);
    if (!err.empty()) {
      Fail(result, err, inst.graph, inst.seed, inst.r, RankString(inst.pi));
      return result;
    }
  }
  return result;
}

SuiteResult RunOracleSuite(std::int64_t trials, std::uint64_t seed,
                           VertexId exhaustive_n) {
  SuiteResult result;
  result.name = "oracle";
  for (VertexId n = 1; n <= exhaustive_n; ++n) {
    for (const Graph& g : GraphsUpToIsomorphism(n)) {
      std::string err;
      RankAssignment bad;
      int bad_r = 0;
      ForEachPermutation(n, [&](const RankAssignment& pi) {
        if (!err.empty()) return;
        for (int r = 1; r <= 3 && err.empty(); ++r) {
          ++result.instances;
          err = OracleChecks(g, pi, r);
          if (!err.empty()) {
            bad = pi;
            bad_r = r;
          }
        }
      });
      if (!err.empty()) {
        Fail(result, err, g, seed, bad_r, RankString(bad));
        return result;
      }
    }
  }
  for (std::int64_t t = 0; t < trials; ++t) {
    const RandomInstance inst = MakeRandomInstance(seed, t, 7, 24);
    ++result.instances;
    std::string err;
    try {
      err = OracleChecks(inst.graph, inst.pi, inst.r);
    } catch (const std::exception& e) {
      err = e.what();
    }
    if (!err.empty()) {
      Fail(result, err, inst.graph, inst.seed, inst.r, RankString(inst.pi));
      return result;
    }
  }
  return result;
}

SuiteResult RunExecutorSuite(std::int64_t trials, std::uint64_t seed,
                             const ExecutorCheckOptions& options) {
  SuiteResult result;
  result.name = "executors";
  for (std::int64_t t = 0; t < trials; ++t) {
    const RandomInstance inst = MakeRandomInstance(seed, t, 2, 50);
    ++result.instances;
    const std::string err =
        CheckExecutors(inst.graph, inst.r, inst.seed, options);
    if (!err.empty()) {
      Fail(result, err, inst.graph, inst.seed, inst.r, "");
      return result;
    }
  }
  return result;
}

}  // namespace rpivot
