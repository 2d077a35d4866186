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

// Pivot-style correlation clustering over a fixed rank order.
//
//  * SequentialPivot: repeatedly take the lowest-ranked remaining vertex,
//    cluster it with its remaining neighbors, remove them.
//  * ParallelPivotFull: in each round every remaining vertex that precedes
//    all of its remaining neighbors becomes a pivot; pivots and their
//    neighbors are removed. The pivot set is the greedy MIS, identical to the
//    sequential one, and each vertex joins its lowest-ranked pivot neighbor.
//  * RPivot: the parallel process stopped after r rounds. Unsettled vertices
//    and vertices that see an unsettled neighbor ranked below all of their
//    pivot neighbors become singletons.
//
// Cluster numbering is deterministic: pivot clusters in increasing pivot
// rank, then singletons in increasing vertex ID.

#ifndef RPIVOT_PIVOT_H_
#define RPIVOT_PIVOT_H_

#include <span>
#include <vector>

#include "rpivot/clustering.h"
#include "rpivot/graph.h"
#include "rpivot/rank.h"

namespace rpivot {

inline constexpr VertexId kNoVertex = -1;

struct PivotRun {
  Clustering clustering;
  std::vector<VertexId> pivots;  // increasing vertex ID
  std::vector<char> is_pivot;
  // p_v: lowest-ranked pivot in {v} ∪ N(v); equals v for pivots.
  std::vector<VertexId> pivot_of;
  // Parallel formulation only (0 / empty for the sequential one).
  int rounds_used = 0;
  std::vector<int> round_of_pivot;  // per vertex, 1-based; 0 if not a pivot
};

struct RPivotState {
  int rounds = 0;
  std::vector<char> settled;
  std::vector<char> is_pivot;
  std::vector<VertexId> pivots;           // increasing vertex ID
  std::vector<VertexId> unsettled_after;  // increasing vertex ID
  // Round (1-based) in which the vertex became settled; 0 if never.
  std::vector<int> settled_round;
  // The pivot whose cluster v is in (v itself for pivots), or kNoVertex for
  // a singleton non-pivot.
  std::vector<VertexId> cluster_pivot;
  Clustering clustering;
};

PivotRun SequentialPivot(const Graph& g, const RankAssignment& pi);
PivotRun ParallelPivotFull(const Graph& g, const RankAssignment& pi);

// Runs exactly r >= 1 rounds; accepts either rank kind.
RPivotState RPivot(const Graph& g, const RankAssignment& pi, int r);

// Same logic restricted to integer ranks (ties broken toward the smaller
// ID). Throws std::invalid_argument for permutation input.
RPivotState RPivotVariant(const Graph& g, const RankAssignment& ranks, int r);

// Final clustering step of r-Pivot given pivot and settled flags: each
// non-pivot u joins its lowest-ranked pivot neighbor p, unless there is none
// or an unsettled neighbor ranks below p. Returns cluster_pivot as above.
std::vector<VertexId> FormClusters(const Graph& g, const RankAssignment& pi,
                                   std::span<const char> is_pivot,
                                   std::span<const char> settled);

// Canonical numbering from cluster_pivot (see file comment).
Clustering ClusteringFromPivots(const RankAssignment& pi,
                                std::span<const VertexId> cluster_pivot);

// ---------------------------------------------------------------------------
// Extra mistakes: pairs that r-Pivot gets wrong while Pivot on the same
// order gets right.

enum class MistakeCase {
  kPivotUnsettled,     // the common pivot is unsettled after r rounds
  kUnsettledWitness,   // common pivot settled; a low-ranked unsettled
                       // non-pivot neighbor of a singleton endpoint exists
};

struct ExtraMistake {
  VertexId u = 0;  // u < v
  VertexId v = 0;
  VertexId common_pivot = kNoVertex;
  MistakeCase kind = MistakeCase::kPivotUnsettled;
  // For kUnsettledWitness: the lowest-ranked valid witness and the singleton
  // endpoint it is adjacent to. kNoVertex otherwise.
  VertexId witness = kNoVertex;
  VertexId witness_endpoint = kNoVertex;
};

struct ExtraMistakes {
  int rounds = 0;
  PivotRun pivot;
  RPivotState rpivot;
  std::vector<ExtraMistake> pairs;  // sorted by (u, v)
};

// Requires a permutation. Throws InvariantViolation if a mistake pair is a
// non-edge or cannot be classified with a checkable witness.
ExtraMistakes ComputeExtraMistakes(const Graph& g, const RankAssignment& pi,
                                   int r);
ExtraMistakes ComputeExtraMistakes(const Graph& g, const RankAssignment& pi,
                                   PivotRun pivot, RPivotState rpivot);

}  // namespace rpivot

#endif  // RPIVOT_PIVOT_H_
