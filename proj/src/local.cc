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


#include <stdexcept>

#include "rpivot/executors.h"

namespace rpivot {

namespace {

enum Tag : std::uint8_t {
  kRank = 0,        // sender is unsettled; payload is its rank
  kNewPivot = 1,    // sender became a pivot this round
  kPivotRank = 2,   // final exchange: sender is a pivot
  kUnsettledRank = 3,  // final exchange: sender is unsettled
};

constexpr int kTagBits = 2;

}  // namespace

int LocalMessageBits(const RankAssignment& ranks, bool with_rank) {
  return kTagBits + (with_rank ? BitWidth(ranks.range()) : 0);
}

LocalSimulation::LocalSimulation(const Graph& g, const RankAssignment& ranks,
                                 int r, LocalOptions options)
    : g_(&g), ranks_(&ranks), r_(r), options_(options) {
  if (r < 1) throw std::invalid_argument("LOCAL r-Pivot needs r >= 1");
  if (ranks.kind() != RankAssignment::Kind::kIntegerRanks) {
    throw std::invalid_argument(
        "the LOCAL executor draws independent integer ranks; permutations "
        "need global coordination");
  }
  if (ranks.n() != g.n()) {
    throw std::invalid_argument("rank assignment does not cover the graph");
  }
  const std::size_t n = static_cast<std::size_t>(g.n());
  state_.assign(n, {});
  new_pivot_.assign(n, 0);
  inbox_.assign(n, {});
  report_.model = "local";
  rank_bits_ = BitWidth(ranks.range());
}

bool LocalSimulation::Precedes(VertexId a, VertexId b) const {
  const uint128 ra = ranks_->raw(a), rb = ranks_->raw(b);
  if (ra != rb) return ra < rb;
  return options_.corrupt_tie_break ? a > b : a < b;
}

void LocalSimulation::Send(VertexId from, VertexId to, std::uint8_t tag,
                           bool with_rank) {
  const std::int64_t bits = kTagBits + (with_rank ? rank_bits_ : 0);
  report_.max_message_bits = std::max(report_.max_message_bits, bits);
  ++report_.total_messages;
  inbox_[to].push_back({from, tag, with_rank ? ranks_->raw(from) : 0});
}

bool LocalSimulation::Step() {
  if (round_ >= total_rounds()) return false;
  ++round_;
  ++report_.passes_or_rounds;
  const VertexId n = g_->n();
  for (auto& box : inbox_) box.clear();

  if (round_ == total_rounds()) {
    // Final exchange of pivot / unsettled status.
    for (VertexId v = 0; v < n; ++v) {
      const LocalVertexState& s = state_[v];
      if (!s.pivot && s.settled) continue;
      const std::uint8_t tag = s.pivot ? kPivotRank : kUnsettledRank;
      for (VertexId w : g_->Neighbors(v)) Send(v, w, tag, true);
    }
    for (VertexId v = 0; v < n; ++v) {
      LocalVertexState& s = state_[v];
      if (s.pivot) {
        s.cluster_pivot = v;
        continue;
      }
      VertexId best_pivot = kNoVertex, best_unsettled = kNoVertex;
      for (const Message& msg : inbox_[v]) {
        VertexId& slot = msg.tag == kPivotRank ? best_pivot : best_unsettled;
        if (slot == kNoVertex || Precedes(msg.from, slot)) slot = msg.from;
      }
      if (best_pivot != kNoVertex &&
          (best_unsettled == kNoVertex ||
           !Precedes(best_unsettled, best_pivot))) {
        s.cluster_pivot = best_pivot;
      }
    }
    return true;
  }

  if (round_ % 2 == 1) {
    for (VertexId v = 0; v < n; ++v) {
      if (state_[v].settled) continue;
      for (VertexId w : g_->Neighbors(v)) Send(v, w, kRank, true);
    }
    for (VertexId v = 0; v < n; ++v) {
      LocalVertexState& s = state_[v];
      if (s.settled) continue;
      bool lowest = true;
      for (const Message& msg : inbox_[v]) {
        if (Precedes(msg.from, v)) {
          lowest = false;
          break;
        }
      }
      if (lowest) {
        s.pivot = true;
        s.settled = true;
        new_pivot_[v] = 1;
      }
    }
  } else {
    for (VertexId v = 0; v < n; ++v) {
      if (!new_pivot_[v]) continue;
      for (VertexId w : g_->Neighbors(v)) Send(v, w, kNewPivot, false);
    }
    for (VertexId v = 0; v < n; ++v) {
      new_pivot_[v] = 0;
      if (!inbox_[v].empty()) state_[v].settled = true;
    }
  }
  return true;
}

ExecutorResult LocalSimulation::Finish() {
  while (Step()) {
  }
  ExecutorResult out;
  const std::size_t n = state_.size();
  out.cluster_pivot.resize(n);
  out.is_pivot.resize(n);
  out.settled.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    out.cluster_pivot[v] = state_[v].cluster_pivot;
    out.is_pivot[v] = state_[v].pivot ? 1 : 0;
    out.settled[v] = state_[v].settled ? 1 : 0;
  }
  out.clustering = ClusteringFromPivots(*ranks_, out.cluster_pivot);
  out.report = report_;
  return out;
}

ExecutorResult LocalExecute(const Graph& g, const RankAssignment& ranks, int r,
                            LocalOptions options) {
  LocalSimulation sim(g, ranks, r, options);
  return sim.Finish();
}

}  // namespace rpivot
