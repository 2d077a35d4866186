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


#include "rpivot/oracle.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rpivot {

QueryContext::QueryContext(const Graph& g, const RankAssignment& pi)
    : g_(&g), pi_(&pi) {
  if (!pi.is_permutation()) {
    throw std::invalid_argument("query oracles are defined for permutations");
  }
  if (pi.n() != g.n()) {
    throw std::invalid_argument("rank assignment does not cover the graph");
  }
  run_ = SequentialPivot(g, pi);
  const VertexId n = g.n();
  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  sorted_.reserve(static_cast<std::size_t>(2 * g.m()));
  lower_count_.assign(static_cast<std::size_t>(n), 0);
  for (VertexId v = 0; v < n; ++v) {
    auto nb = g.Neighbors(v);
    const std::size_t start = sorted_.size();
    sorted_.insert(sorted_.end(), nb.begin(), nb.end());
    std::sort(sorted_.begin() + static_cast<std::ptrdiff_t>(start),
              sorted_.end(),
              [&](VertexId a, VertexId b) { return pi.Less(a, b); });
    std::int32_t lower = 0;
    for (VertexId w : nb) lower += pi.Less(w, v) ? 1 : 0;
    lower_count_[v] = lower;
    offsets_[v + 1] = static_cast<std::int64_t>(sorted_.size());
  }
  memo_.assign(static_cast<std::size_t>(n), -1);
}

std::span<const VertexId> QueryContext::SortedNeighbors(VertexId v) const {
  return {sorted_.data() + offsets_[v],
          static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
}

std::span<const VertexId> QueryContext::Lower(VertexId v) const {
  return {sorted_.data() + offsets_[v],
          static_cast<std::size_t>(lower_count_[v])};
}

std::vector<VertexId> QueryContext::PairCandidates(VertexId u,
                                                   VertexId v) const {
  if (u == v) throw std::invalid_argument("pair oracle needs u != v");
  const VertexId low = pi_->Less(u, v) ? u : v;
  auto a = SortedNeighbors(u);
  auto b = SortedNeighbors(v);
  std::vector<VertexId> out;
  std::size_t i = 0, j = 0;
  auto below = [&](VertexId w) { return pi_->Less(w, low); };
  while (true) {
    const bool has_a = i < a.size() && below(a[i]);
    const bool has_b = j < b.size() && below(b[j]);
    if (!has_a && !has_b) break;
    if (has_a && has_b && a[i] == b[j]) {
      out.push_back(a[i]);
      ++i;
      ++j;
    } else if (has_a && (!has_b || pi_->Less(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else {
      out.push_back(b[j++]);
    }
  }
  return out;
}

bool QueryContext::IsPivot(VertexId root) {
  if (memo_[root] >= 0) return memo_[root] == 1;
  struct Frame {
    VertexId v;
    std::size_t idx;
  };
  std::vector<Frame> frames{{root, 0}};
  while (!frames.empty()) {
    const VertexId v = frames.back().v;
    if (memo_[v] >= 0) {
      frames.pop_back();
      continue;
    }
    auto lower = Lower(v);
    std::size_t idx = frames.back().idx;
    bool descended = false;
    while (idx < lower.size()) {
      const VertexId w = lower[idx];
      if (memo_[w] < 0) {
        frames.back().idx = idx;
        frames.push_back({w, 0});
        descended = true;
        break;
      }
      if (memo_[w] == 1) break;
      ++idx;
    }
    if (descended) continue;
    memo_[v] = idx == lower.size() ? 1 : 0;
    frames.pop_back();
  }
  return memo_[root] == 1;
}

bool QueryContext::PairValue(VertexId u, VertexId v) {
  for (VertexId w : PairCandidates(u, v)) {
    if (IsPivot(w)) return false;
  }
  return true;
}

std::vector<VertexId> QueryContext::DirectQueries(VertexId v) {
  std::vector<VertexId> out;
  for (VertexId w : Lower(v)) {
    out.push_back(w);
    if (IsPivot(w)) break;
  }
  return out;
}

std::vector<VertexId> QueryContext::DirectQueriesPair(VertexId u, VertexId v) {
  std::vector<VertexId> out;
  for (VertexId w : PairCandidates(u, v)) {
    out.push_back(w);
    if (IsPivot(w)) break;
  }
  return out;
}

std::vector<std::vector<VertexId>> QueryTrace::Snapshots() const {
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> stack;
  out.reserve(events.size());
  for (VertexId e : events) {
    if (e >= 0) {
      stack.push_back(e);
    } else {
      stack.pop_back();
    }
    out.push_back(stack);
  }
  return out;
}

namespace {

QueryTrace TraceFrom(const QueryContext& ctx, std::span<const VertexId> root,
                     const TraceOptions& options) {
  struct Frame {
    VertexId v;
    std::size_t idx;
  };
  QueryTrace trace;
  std::vector<Frame> frames;
  std::size_t root_idx = 0;

  // Returns true when the stack limit stops the trace.
  auto push = [&](VertexId w) {
    if (++trace.direct_query_count > options.query_budget) {
      throw QueryBudgetExceeded("oracle trace exceeded the budget of " +
                                std::to_string(options.query_budget) +
                                " direct queries");
    }
    frames.push_back({w, 0});
    if (options.record_events) trace.events.push_back(w);
    const int size = static_cast<int>(frames.size());
    if (size > trace.max_stack) {
      trace.max_stack = size;
      std::vector<VertexId> snapshot;
      snapshot.reserve(frames.size());
      for (const Frame& f : frames) snapshot.push_back(f.v);
      trace.first_stack.push_back(std::move(snapshot));
    }
    if (options.stack_limit && size >= *options.stack_limit) {
      trace.truncated_at = *options.stack_limit;
      return true;
    }
    return false;
  };

  for (;;) {
    if (frames.empty()) {
      if (root_idx == root.size()) {
        trace.result = true;
        return trace;
      }
      const VertexId w = root[root_idx++];
      trace.root_queries.push_back(w);
      if (push(w)) return trace;
      continue;
    }
    Frame& top = frames.back();
    auto lower = ctx.Lower(top.v);
    if (top.idx < lower.size()) {
      const VertexId w = lower[top.idx++];
      if (push(w)) return trace;
      continue;
    }
    // The top call returns 1; unwind.
    int value = 1;
    for (;;) {
      frames.pop_back();
      if (options.record_events) trace.events.push_back(-1);
      if (frames.empty()) {
        if (value == 1) {
          trace.result = false;
          return trace;
        }
        break;
      }
      if (value == 1) {
        value = 0;  // the parent returns 0
        continue;
      }
      break;
    }
  }
}

bool Contains(std::span<const VertexId> list, VertexId x) {
  return std::find(list.begin(), list.end(), x) != list.end();
}

std::string Describe(std::span<const VertexId> list) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < list.size(); ++i) {
    out << (i ? "," : "") << list[i];
  }
  out << '}';
  return out.str();
}

std::string CheckAgainst(const QueryContext& ctx, const std::string& who,
                         std::vector<VertexId> expected,
                         std::span<const VertexId> queried,
                         VertexId allowed_pivot) {
  std::vector<VertexId> got(queried.begin(), queried.end());
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  if (got != expected) {
    return who + " queried " + Describe(got) + ", expected " +
           Describe(expected);
  }
  const auto& is_pivot = ctx.pivot_run().is_pivot;
  for (VertexId z : got) {
    if (is_pivot[z] && z != allowed_pivot) {
      return who + " directly queries pivot " + std::to_string(z);
    }
  }
  if (allowed_pivot != kNoVertex && !Contains(got, allowed_pivot)) {
    return who + " does not query its pivot " + std::to_string(allowed_pivot);
  }
  return {};
}

}  // namespace

QueryTrace TraceVertex(const QueryContext& ctx, VertexId v,
                       const TraceOptions& options) {
  return TraceFrom(ctx, ctx.Lower(v), options);
}

QueryTrace TraceVertex(const Graph& g, const RankAssignment& pi, VertexId v,
                       const TraceOptions& options) {
  const QueryContext ctx(g, pi);
  return TraceVertex(ctx, v, options);
}

QueryTrace TracePair(const QueryContext& ctx, VertexId u, VertexId v,
                     const TraceOptions& options) {
  const std::vector<VertexId> root = ctx.PairCandidates(u, v);
  return TraceFrom(ctx, root, options);
}

QueryTrace TracePair(const Graph& g, const RankAssignment& pi, VertexId u,
                     VertexId v, const TraceOptions& options) {
  const QueryContext ctx(g, pi);
  return TracePair(ctx, u, v, options);
}

std::vector<VertexId> ExpectedDirectQueries(const QueryContext& ctx,
                                            VertexId v) {
  const PivotRun& run = ctx.pivot_run();
  const RankAssignment& pi = ctx.pi();
  std::vector<VertexId> out;
  if (run.is_pivot[v]) {
    for (VertexId z : ctx.graph().Neighbors(v)) {
      if (pi.Less(z, v)) out.push_back(z);
    }
  } else {
    const VertexId p = run.pivot_of[v];
    for (VertexId z : ctx.graph().Neighbors(v)) {
      if (pi.Key(z) <= pi.Key(p)) out.push_back(z);
    }
  }
  return out;
}

std::vector<VertexId> ExpectedDirectQueriesPair(const QueryContext& ctx,
                                                VertexId u, VertexId v) {
  const PivotRun& run = ctx.pivot_run();
  const RankAssignment& pi = ctx.pi();
  const VertexId p = run.pivot_of[u];
  if (run.pivot_of[v] != p) {
    throw std::invalid_argument("pair does not share a Pivot pivot");
  }
  const bool endpoint = p == u || p == v;
  std::vector<VertexId> out;
  const Graph& g = ctx.graph();
  for (VertexId side : {u, v}) {
    for (VertexId z : g.Neighbors(side)) {
      if (z == u || z == v) continue;
      const bool keep = endpoint ? pi.Key(z) < pi.Key(p)
                                 : pi.Key(z) <= pi.Key(p);
      if (keep && !Contains(out, z)) out.push_back(z);
    }
  }
  return out;
}

std::string CheckDirectQueries(const QueryContext& ctx, VertexId v,
                               std::span<const VertexId> queried) {
  const PivotRun& run = ctx.pivot_run();
  const VertexId allowed = run.is_pivot[v] ? kNoVertex : run.pivot_of[v];
  return CheckAgainst(ctx, "vertex " + std::to_string(v),
                      ExpectedDirectQueries(ctx, v), queried, allowed);
}

std::string CheckDirectQueriesPair(const QueryContext& ctx, VertexId u,
                                   VertexId v,
                                   std::span<const VertexId> queried) {
  const VertexId p = ctx.pivot_run().pivot_of[u];
  const VertexId allowed = (p == u || p == v) ? kNoVertex : p;
  return CheckAgainst(
      ctx, "pair {" + std::to_string(u) + "," + std::to_string(v) + "}",
      ExpectedDirectQueriesPair(ctx, u, v), queried, allowed);
}

namespace {

StackPath PathFromStack(QueryContext& ctx, VertexId u, VertexId v,
                        const std::vector<VertexId>& stack) {
  const VertexId w1 = stack.front();
  const bool by_u = Contains(ctx.DirectQueries(u), w1);
  const bool by_v = Contains(ctx.DirectQueries(v), w1);
  StackPath path;
  path.ell = static_cast<int>(stack.size());
  path.u = std::min(u, v);
  path.v = std::max(u, v);
  VertexId first, second;
  if (by_u && !by_v) {
    first = v;
    second = u;
  } else if (by_v && !by_u) {
    first = u;
    second = v;
  } else if (by_u && by_v) {
    path.both_query_first = true;
    // The lower-ranked endpoint goes second so ranks descend.
    second = ctx.pi().Less(u, v) ? u : v;
    first = second == u ? v : u;
  } else {
    throw InvariantViolation("first stack vertex " + std::to_string(w1) +
                             " is queried by neither endpoint of {" +
                             std::to_string(u) + "," + std::to_string(v) +
                             "}");
  }
  path.vertices.reserve(stack.size() + 2);
  path.vertices.push_back(first);
  path.vertices.push_back(second);
  path.vertices.insert(path.vertices.end(), stack.begin(), stack.end());
  return path;
}

}  // namespace

std::vector<StackPath> BuildStackPaths(QueryContext& ctx, VertexId u,
                                       VertexId v, int max_ell,
                                       std::int64_t query_budget) {
  if (max_ell < 2) throw std::invalid_argument("stack paths need ell >= 2");
  TraceOptions options;
  options.stack_limit = max_ell;
  options.query_budget = query_budget;
  const QueryTrace trace = TracePair(ctx, u, v, options);
  if (trace.max_stack < max_ell) {
    throw InvariantViolation(
        "pair {" + std::to_string(u) + "," + std::to_string(v) +
        "}: oracle stack peaks at " + std::to_string(trace.max_stack) +
        " elements, never reaching " + std::to_string(max_ell));
  }
  std::vector<StackPath> out;
  for (int ell = 2; ell <= max_ell; ++ell) {
    out.push_back(PathFromStack(ctx, u, v, trace.first_stack[ell - 1]));
  }
  return out;
}

StackPath BuildStackPath(QueryContext& ctx, VertexId u, VertexId v, int ell,
                         std::int64_t query_budget) {
  if (ell < 2) throw std::invalid_argument("stack paths need ell >= 2");
  return std::move(BuildStackPaths(ctx, u, v, ell, query_budget).back());
}

bool IsBadTriangle(const Graph& g, VertexId a, VertexId b, VertexId c) {
  if (a == b || b == c || a == c) return false;
  const int edges = (g.HasEdge(a, b) ? 1 : 0) + (g.HasEdge(b, c) ? 1 : 0) +
                    (g.HasEdge(a, c) ? 1 : 0);
  return edges == 2;
}

ChargeRecord ChargeFromPath(const Graph& g, const StackPath& path) {
  const std::size_t k = path.vertices.size();
  ChargeRecord out;
  out.u = path.u;
  out.v = path.v;
  out.ell = path.ell;
  out.triangle = {path.vertices[k - 3], path.vertices[k - 2],
                  path.vertices[k - 1]};
  if (!IsBadTriangle(g, out.triangle.a, out.triangle.b, out.triangle.c)) {
    throw InvariantViolation(
        "charge of pair {" + std::to_string(path.u) + "," +
        std::to_string(path.v) + "} at ell=" + std::to_string(path.ell) +
        " lands on (" + std::to_string(out.triangle.a) + "," +
        std::to_string(out.triangle.b) + "," + std::to_string(out.triangle.c) +
        "), which is not a bad triangle");
  }
  return out;
}

ChargeRecord Charge(QueryContext& ctx, VertexId u, VertexId v, int ell) {
  return ChargeFromPath(ctx.graph(), BuildStackPath(ctx, u, v, ell));
}

ChargingRoundResult ChargingRound(QueryContext& ctx,
                                  const ExtraMistakes& mistakes, int r,
                                  Rng& rng) {
  if (r < 1) throw std::invalid_argument("charging needs r >= 1");
  ChargingRoundResult out;
  out.ell = 2 + static_cast<int>(UniformBelow(rng, 2 * r - 1));
  for (const ExtraMistake& x : mistakes.pairs) {
    out.charges.push_back(Charge(ctx, x.u, x.v, out.ell));
  }
  return out;
}

ChargingRoundResult ChargingRound(const Graph& g, const RankAssignment& pi,
                                  int r, Rng& rng) {
  QueryContext ctx(g, pi);
  const ExtraMistakes mistakes = ComputeExtraMistakes(g, pi, r);
  return ChargingRound(ctx, mistakes, r, rng);
}

WidthStudyResult WidthStudy(const Graph& g, int r, std::int64_t trials,
                            std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("width study needs trials >= 1");
  if (r < 1) throw std::invalid_argument("width study needs r >= 1");
  const VertexId n = g.n();
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  WidthStudyResult out;
  out.rounds = r;
  out.trials = trials;
  out.ell_histogram.assign(static_cast<std::size_t>(2 * r - 1), 0);

  // Per-trial counts: charges indexed [a*n+b] with a < b, R directed [a*n+b].
  std::vector<std::int64_t> charges(nn, 0), rdir(nn, 0);
  std::vector<SumStats> charge_stats(nn), r_stats(nn), width_stats(nn);
  std::vector<std::size_t> touched;
  auto idx = [n](VertexId a, VertexId b) {
    return static_cast<std::size_t>(a) * n + b;
  };
  auto touch = [&](std::size_t i) { touched.push_back(i); };
  const double denom = 2.0 * r - 1.0;

  for (std::int64_t t = 0; t < trials; ++t) {
    Rng rng = MakeRng(seed, static_cast<std::uint64_t>(t));
    const RankAssignment pi = RandomPermutation(n, rng);
    QueryContext ctx(g, pi);
    const ExtraMistakes mistakes = ComputeExtraMistakes(g, pi, r);
    out.mistakes.Add(static_cast<double>(mistakes.pairs.size()));
    const int ell = 2 + static_cast<int>(UniformBelow(rng, 2 * r - 1));
    ++out.ell_histogram[ell - 2];
    touched.clear();
    for (const ExtraMistake& x : mistakes.pairs) {
      const std::vector<StackPath> paths = BuildStackPaths(ctx, x.u, x.v, 2 * r);
      for (const StackPath& path : paths) {
        const ChargeRecord c = ChargeFromPath(g, path);
        const VertexId a = c.triangle.a, b = c.triangle.b, z = c.triangle.c;
        // (a,b) and (b,z) are edges, {a,z} is the non-edge.
        for (auto [p, q] : {std::pair{a, b}, std::pair{b, z}, std::pair{a, z}}) {
          rdir[idx(p, q)] += 1;
          touch(idx(p, q));
        }
        if (path.ell == ell) {
          for (auto [p, q] :
               {std::pair{a, b}, std::pair{b, z}, std::pair{a, z}}) {
            const std::size_t i = idx(std::min(p, q), std::max(p, q));
            charges[i] += 1;
            touch(i);
          }
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    // Flush per unordered pair once.
    std::vector<std::size_t> pairs;
    for (std::size_t i : touched) {
      const VertexId p = static_cast<VertexId>(i / n);
      const VertexId q = static_cast<VertexId>(i % n);
      pairs.push_back(idx(std::min(p, q), std::max(p, q)));
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    for (std::size_t i : pairs) {
      const VertexId a = static_cast<VertexId>(i / n);
      const VertexId b = static_cast<VertexId>(i % n);
      const std::size_t j = idx(b, a);
      charge_stats[i].Add(static_cast<double>(charges[i]));
      r_stats[i].Add(static_cast<double>(rdir[i]));
      r_stats[j].Add(static_cast<double>(rdir[j]));
      width_stats[i].Add(static_cast<double>(rdir[i] + rdir[j]) / denom);
      charges[i] = 0;
      rdir[i] = 0;
      rdir[j] = 0;
    }
  }

  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      const std::size_t i = idx(a, b), j = idx(b, a);
      PairWidth w;
      w.a = a;
      w.b = b;
      w.is_edge = g.HasEdge(a, b);
      w.mean_charges = charge_stats[i].Mean(trials);
      w.stderr_charges = charge_stats[i].StdErr(trials);
      w.mean_r_ab = r_stats[i].Mean(trials);
      w.stderr_r_ab = r_stats[i].StdErr(trials);
      w.mean_r_ba = r_stats[j].Mean(trials);
      w.stderr_r_ba = r_stats[j].StdErr(trials);
      w.mean_r_width = width_stats[i].Mean(trials);
      w.stderr_r_width = width_stats[i].StdErr(trials);
      out.pairs.push_back(w);
    }
  }
  return out;
}

std::string WidthStudyCsv(const WidthStudyResult& result) {
  std::ostringstream out;
  out.precision(10);
  out << "a,b,is_edge,mean_charges,stderr,trials,mean_r_ab,stderr_r_ab,"
         "mean_r_ba,stderr_r_ba,mean_r_width,stderr_r_width\n";
  for (const PairWidth& w : result.pairs) {
    out << w.a << ',' << w.b << ',' << (w.is_edge ? 1 : 0) << ','
        << w.mean_charges << ',' << w.stderr_charges << ',' << result.trials
        << ',' << w.mean_r_ab << ',' << w.stderr_r_ab << ',' << w.mean_r_ba
        << ',' << w.stderr_r_ba << ',' << w.mean_r_width << ','
        << w.stderr_r_width << '\n';
  }
  return out.str();
}

}  // namespace rpivot
