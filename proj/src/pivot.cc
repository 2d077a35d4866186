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

#include "rpivot/pivot.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rpivot {

namespace {

void CheckCovers(const Graph& g, const RankAssignment& pi) {
  if (pi.n() != g.n()) {
    throw std::invalid_argument("rank assignment covers " +
                                std::to_string(pi.n()) +
                                " vertices, graph has " +
                                std::to_string(g.n()));
  }
}

std::vector<VertexId> FlagsToList(std::span<const char> flags, bool value) {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < flags.size(); ++v) {
    if (static_cast<bool>(flags[v]) == value) {
      out.push_back(static_cast<VertexId>(v));
    }
  }
  return out;
}

// Lowest-ranked pivot in {v} ∪ N(v), or kNoVertex.
VertexId LowestPivotInClosedNbhd(const Graph& g, const RankAssignment& pi,
                                 std::span<const char> is_pivot, VertexId v) {
  VertexId best = is_pivot[v] ? v : kNoVertex;
  for (VertexId w : g.Neighbors(v)) {
    if (is_pivot[w] && (best == kNoVertex || pi.Less(w, best))) best = w;
  }
  return best;
}

}  // namespace

Clustering ClusteringFromPivots(const RankAssignment& pi,
                                std::span<const VertexId> cluster_pivot) {
  const VertexId n = static_cast<VertexId>(cluster_pivot.size());
  std::vector<ClusterId> ids(static_cast<std::size_t>(n), -1);
  ClusterId next = 0;
  for (VertexId p : pi.order()) {
    if (cluster_pivot[p] == p) ids[p] = next++;
  }
  for (VertexId v = 0; v < n; ++v) {
    const VertexId p = cluster_pivot[v];
    if (p == kNoVertex) {
      ids[v] = next++;
    } else if (p != v) {
      if (cluster_pivot[p] != p) {
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " joins non-pivot " + std::to_string(p));
      }
      ids[v] = ids[p];
    }
  }
  return Clustering::FromIds(std::move(ids));
}

PivotRun SequentialPivot(const Graph& g, const RankAssignment& pi) {
  CheckCovers(g, pi);
  const VertexId n = g.n();
  PivotRun run;
  run.is_pivot.assign(static_cast<std::size_t>(n), 0);
  run.pivot_of.assign(static_cast<std::size_t>(n), kNoVertex);
  run.round_of_pivot.assign(static_cast<std::size_t>(n), 0);
  for (VertexId v : pi.order()) {
    if (run.pivot_of[v] != kNoVertex) continue;
    run.is_pivot[v] = 1;
    run.pivot_of[v] = v;
    for (VertexId w : g.Neighbors(v)) {
      if (run.pivot_of[w] == kNoVertex) run.pivot_of[w] = v;
    }
  }
  run.pivots = FlagsToList(run.is_pivot, true);
  run.clustering = ClusteringFromPivots(pi, run.pivot_of);
  return run;
}

PivotRun ParallelPivotFull(const Graph& g, const RankAssignment& pi) {
  CheckCovers(g, pi);
  const VertexId n = g.n();
  PivotRun run;
  run.is_pivot.assign(static_cast<std::size_t>(n), 0);
  run.round_of_pivot.assign(static_cast<std::size_t>(n), 0);
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::vector<VertexId> remaining(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) remaining[v] = v;

  std::vector<VertexId> fresh;
  while (!remaining.empty()) {
    ++run.rounds_used;
    fresh.clear();
    for (VertexId v : remaining) {
      bool local_min = true;
      for (VertexId w : g.Neighbors(v)) {
        if (!removed[w] && pi.Less(w, v)) {
          local_min = false;
          break;
        }
      }
      if (local_min) fresh.push_back(v);
    }
    for (VertexId v : fresh) {
      run.is_pivot[v] = 1;
      run.round_of_pivot[v] = run.rounds_used;
    }
    for (VertexId v : fresh) {
      removed[v] = 1;
      for (VertexId w : g.Neighbors(v)) removed[w] = 1;
    }
    std::erase_if(remaining, [&](VertexId v) { return removed[v] != 0; });
  }

  run.pivot_of.resize(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) {
    run.pivot_of[v] = LowestPivotInClosedNbhd(g, pi, run.is_pivot, v);
  }
  run.pivots = FlagsToList(run.is_pivot, true);
  run.clustering = ClusteringFromPivots(pi, run.pivot_of);
  return run;
}

std::vector<VertexId> FormClusters(const Graph& g, const RankAssignment& pi,
                                   std::span<const char> is_pivot,
                                   std::span<const char> settled) {
  const VertexId n = g.n();
  std::vector<VertexId> cluster_pivot(static_cast<std::size_t>(n), kNoVertex);
  for (VertexId u = 0; u < n; ++u) {
    if (is_pivot[u]) {
      cluster_pivot[u] = u;
      continue;
    }
    VertexId best_pivot = kNoVertex;
    VertexId best_unsettled = kNoVertex;
    for (VertexId w : g.Neighbors(u)) {
      if (is_pivot[w]) {
        if (best_pivot == kNoVertex || pi.Less(w, best_pivot)) best_pivot = w;
      } else if (!settled[w]) {
        if (best_unsettled == kNoVertex || pi.Less(w, best_unsettled)) {
          best_unsettled = w;
        }
      }
    }
    if (best_pivot == kNoVertex) continue;
    if (best_unsettled != kNoVertex && pi.Less(best_unsettled, best_pivot)) {
      continue;
    }
    cluster_pivot[u] = best_pivot;
  }
  return cluster_pivot;
}

RPivotState RPivot(const Graph& g, const RankAssignment& pi, int r) {
  CheckCovers(g, pi);
  if (r < 1) throw std::invalid_argument("r-Pivot needs r >= 1");
  const VertexId n = g.n();
  RPivotState state;
  state.rounds = r;
  state.settled.assign(static_cast<std::size_t>(n), 0);
  state.is_pivot.assign(static_cast<std::size_t>(n), 0);
  state.settled_round.assign(static_cast<std::size_t>(n), 0);

  std::vector<VertexId> unsettled(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) unsettled[v] = v;
  std::vector<VertexId> fresh;
  for (int t = 1; t <= r && !unsettled.empty(); ++t) {
    fresh.clear();
    for (VertexId v : unsettled) {
      bool local_min = true;
      for (VertexId w : g.Neighbors(v)) {
        if (!state.settled[w] && pi.Less(w, v)) {
          local_min = false;
          break;
        }
      }
      if (local_min) fresh.push_back(v);
    }
    for (VertexId v : fresh) state.is_pivot[v] = 1;
    for (VertexId v : fresh) {
      if (!state.settled[v]) {
        state.settled[v] = 1;
        state.settled_round[v] = t;
      }
      for (VertexId w : g.Neighbors(v)) {
        if (!state.settled[w]) {
          state.settled[w] = 1;
          state.settled_round[w] = t;
        }
      }
    }
    std::erase_if(unsettled, [&](VertexId v) { return state.settled[v] != 0; });
  }

  state.pivots = FlagsToList(state.is_pivot, true);
  state.unsettled_after = std::move(unsettled);
  state.cluster_pivot = FormClusters(g, pi, state.is_pivot, state.settled);
  for (VertexId v : state.unsettled_after) {
    // No pivot neighbor, so the final rule must make it a singleton.
    if (state.cluster_pivot[v] != kNoVertex) {
      throw InvariantViolation("unsettled vertex " + std::to_string(v) +
                               " joined a cluster");
    }
  }
  state.clustering = ClusteringFromPivots(pi, state.cluster_pivot);
  return state;
}

RPivotState RPivotVariant(const Graph& g, const RankAssignment& ranks, int r) {
  if (ranks.kind() != RankAssignment::Kind::kIntegerRanks) {
    throw std::invalid_argument(
        "RPivotVariant expects integer ranks; use RPivot for permutations");
  }
  return RPivot(g, ranks, r);
}

ExtraMistakes ComputeExtraMistakes(const Graph& g, const RankAssignment& pi,
                                   int r) {
  if (!pi.is_permutation()) {
    throw std::invalid_argument("extra mistakes are defined for permutations");
  }
  return ComputeExtraMistakes(g, pi, SequentialPivot(g, pi), RPivot(g, pi, r));
}

ExtraMistakes ComputeExtraMistakes(const Graph& g, const RankAssignment& pi,
                                   PivotRun pivot, RPivotState rpivot) {
  if (!pi.is_permutation()) {
    throw std::invalid_argument("extra mistakes are defined for permutations");
  }
  ExtraMistakes out;
  out.rounds = rpivot.rounds;
  const Clustering& full = pivot.clustering;
  const Clustering& trunc = rpivot.clustering;

  // Non-edges joined by r-Pivot but split by Pivot would be mistakes on
  // non-edges; the refinement property rules them out.
  for (const auto& members : trunc.Members()) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const VertexId a = members[i], b = members[j];
        if (full[a] != full[b] && !g.HasEdge(a, b)) {
          throw InvariantViolation("extra mistake on non-edge {" +
                                   std::to_string(a) + "," +
                                   std::to_string(b) + "}");
        }
      }
    }
  }

  const auto trunc_sizes = trunc.Sizes();
  for (const Edge& e : g.Edges()) {
    if (full[e.u] != full[e.v] || trunc[e.u] == trunc[e.v]) continue;
    ExtraMistake mistake;
    mistake.u = e.u;
    mistake.v = e.v;
    const VertexId p = pivot.pivot_of[e.u];
    if (pivot.pivot_of[e.v] != p) {
      throw InvariantViolation("pair {" + std::to_string(e.u) + "," +
                               std::to_string(e.v) +
                               "} shares a Pivot cluster but not a pivot");
    }
    mistake.common_pivot = p;
    if (!rpivot.settled[p]) {
      mistake.kind = MistakeCase::kPivotUnsettled;
    } else {
      mistake.kind = MistakeCase::kUnsettledWitness;
      for (VertexId endpoint : {e.u, e.v}) {
        if (trunc_sizes[trunc[endpoint]] != 1) continue;
        for (VertexId w : g.Neighbors(endpoint)) {
          if (rpivot.settled[w] || pivot.is_pivot[w] || !pi.Less(w, p)) {
            continue;
          }
          if (mistake.witness == kNoVertex || pi.Less(w, mistake.witness)) {
            mistake.witness = w;
            mistake.witness_endpoint = endpoint;
          }
        }
      }
      if (mistake.witness == kNoVertex) {
        throw InvariantViolation("mistake {" + std::to_string(e.u) + "," +
                                 std::to_string(e.v) +
                                 "} has a settled common pivot but no "
                                 "unsettled witness");
      }
    }
    out.pairs.push_back(mistake);
  }
  out.pivot = std::move(pivot);
  out.rpivot = std::move(rpivot);
  return out;
}

}  // namespace rpivot
