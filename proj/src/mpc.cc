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


#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rpivot/executors.h"

namespace rpivot {

std::int64_t MpcCapacity(VertexId n, double delta) {
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw std::invalid_argument("MPC space exponent delta must lie in (0, 1]");
  }
  const double s = std::pow(static_cast<double>(std::max<VertexId>(n, 1)),
                            delta);
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(s - 1e-9)));
}

namespace {

// A word holds one rank key: the position of a vertex in the (rank, ID)
// order, so one word carries both.
struct Record {
  std::uint32_t first;
  std::uint32_t second;
  bool operator<(const Record& o) const {
    return first != o.first ? first < o.first : second < o.second;
  }
};

constexpr std::int64_t kRecordWords = 2;

class Cluster {
 public:
  Cluster(std::int64_t capacity, ResourceReport* report)
      : capacity_(capacity), per_machine_(capacity / kRecordWords),
        report_(report) {}

  std::int64_t per_machine() const { return per_machine_; }

  std::int64_t MachinesFor(std::int64_t items) const {
    return (items + per_machine_ - 1) / per_machine_;
  }

  void Load(std::int64_t words, const char* what) {
    report_->max_machine_load_words =
        std::max(report_->max_machine_load_words, words);
    if (words > capacity_) {
      throw InvariantViolation(std::string("MPC machine over capacity during ") +
                               what + ": " + std::to_string(words) + " > " +
                               std::to_string(capacity_) + " words");
    }
  }

  void Primitive() { ++report_->primitives; }

  // Sorts and cuts the list into machines; returns the first element of
  // every run of equal `first`, found locally plus one boundary word from the
  // previous machine.
  std::vector<Record> SortedRunHeads(std::vector<Record> list,
                                     std::int64_t resident_machines,
                                     const char* what) {
    Primitive();
    std::sort(list.begin(), list.end());
    const std::int64_t machines = MachinesFor(
        static_cast<std::int64_t>(list.size()));
    report_->machine_count =
        std::max(report_->machine_count, resident_machines + machines);
    std::vector<Record> heads;
    for (std::int64_t mi = 0; mi < machines; ++mi) {
      const std::size_t lo = static_cast<std::size_t>(mi * per_machine_);
      const std::size_t hi =
          std::min(list.size(), static_cast<std::size_t>(lo + per_machine_));
      Load(static_cast<std::int64_t>(hi - lo) * kRecordWords, what);
      // Word from the previous machine: its last `first`.
      const bool has_prev = mi > 0;
      const std::uint32_t prev = has_prev ? list[lo - 1].first : 0;
      for (std::size_t i = lo; i < hi; ++i) {
        const bool head = i > lo ? list[i - 1].first != list[i].first
                                 : !has_prev || prev != list[i].first;
        if (head) heads.push_back(list[i]);
      }
    }
    return heads;
  }

  // Delivers one word per head to the machine holding heads[i].first; checks
  // the receiving load.
  void Deliver(const std::vector<Record>& heads, VertexId n,
               const char* what) {
    Primitive();
    std::vector<std::int64_t> incoming(
        static_cast<std::size_t>(MachinesFor(n)), 0);
    for (const Record& h : heads) ++incoming[h.first / per_machine_];
    for (std::int64_t words : incoming) Load(words, what);
  }

 private:
  std::int64_t capacity_;
  std::int64_t per_machine_;
  ResourceReport* report_;
};

}  // namespace

ExecutorResult MpcExecute(const Graph& g, const RankAssignment& ranks, int r,
                          double delta) {
  if (r < 1) throw std::invalid_argument("MPC r-Pivot needs r >= 1");
  if (ranks.n() != g.n()) {
    throw std::invalid_argument("rank assignment does not cover the graph");
  }
  const VertexId n = g.n();
  const std::int64_t capacity = MpcCapacity(n, delta);
  if (capacity < kRecordWords) {
    throw std::invalid_argument(
        "MPC capacity S = ceil(n^delta) = " + std::to_string(capacity) +
        " word(s) cannot hold one two-word record; raise delta or n");
  }
  ExecutorResult out;
  ResourceReport& rep = out.report;
  rep.model = "mpc";
  rep.machine_capacity_words = capacity;
  rep.booked_round_constant = kMpcRoundsPerPrimitive;
  rep.rounds_per_primitive =
      kMpcRoundsPerPrimitive * static_cast<std::int64_t>(std::ceil(1.0 / delta - 1e-12));
  Cluster cluster(capacity, &rep);

  // Vertex machines M_v hold (key, status) for a block of vertices, indexed
  // by key; edge machines hold input edges as key pairs.
  std::vector<Edge> edges = g.Edges();
  const std::int64_t vertex_machines = cluster.MachinesFor(n);
  const std::int64_t edge_machines =
      cluster.MachinesFor(static_cast<std::int64_t>(edges.size()));
  const std::int64_t resident = vertex_machines + edge_machines;
  rep.machine_count = resident;
  for (std::int64_t mi = 0; mi < vertex_machines; ++mi) {
    cluster.Load(std::min<std::int64_t>(cluster.per_machine(),
                                        n - mi * cluster.per_machine()) *
                     kRecordWords,
                 "vertex placement");
  }
  for (std::int64_t mi = 0; mi < edge_machines; ++mi) {
    cluster.Load(std::min<std::int64_t>(
                     cluster.per_machine(),
                     static_cast<std::int64_t>(edges.size()) -
                         mi * cluster.per_machine()) *
                     kRecordWords,
                 "edge placement");
  }

  // Status indexed by key.
  enum : std::uint8_t { kSettled = 1, kPivot = 2, kNew = 4 };
  std::vector<std::uint8_t> status(static_cast<std::size_t>(n), 0);
  auto key = [&](VertexId v) { return ranks.Key(v); };

  for (int t = 1; t <= r; ++t) {
    // Edge machines learn endpoint status (join), then emit L_t.
    cluster.Primitive();
    std::vector<Record> list;
    for (const Edge& e : edges) {
      const std::uint32_t a = key(e.u), b = key(e.v);
      if (!(status[a] & kSettled) && !(status[b] & kSettled)) {
        list.push_back({a, b});
        list.push_back({b, a});
      }
    }
    for (std::uint32_t k = 0; k < static_cast<std::uint32_t>(n); ++k) {
      if (!(status[k] & kSettled)) list.push_back({k, k});
    }
    const std::vector<Record> heads =
        cluster.SortedRunHeads(std::move(list), resident, "sorting L_t");
    cluster.Deliver(heads, n, "eta delivery");
    for (const Record& h : heads) {
      // eta_t(u) = h.second.
      if (h.second == h.first) status[h.first] |= kSettled | kPivot | kNew;
    }
    // Edge machines settle unsettled neighbors of new pivots (join).
    cluster.Primitive();
    for (const Edge& e : edges) {
      const std::uint32_t a = key(e.u), b = key(e.v);
      if ((status[a] & kNew) && !(status[b] & kSettled)) status[b] |= kSettled;
      if ((status[b] & kNew) && !(status[a] & kSettled)) status[a] |= kSettled;
    }
    for (auto& s : status) s &= ~kNew;
  }

  // Final step: lowest pivot neighbor, then lowest unsettled neighbor, of
  // every non-pivot, each via a sorted list and run heads.
  cluster.Primitive();
  std::vector<Record> pivot_list, unsettled_list;
  for (const Edge& e : edges) {
    const std::uint32_t a = key(e.u), b = key(e.v);
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      if (status[x] & kPivot) continue;
      if (status[y] & kPivot) pivot_list.push_back({x, y});
      if (!(status[y] & kSettled)) unsettled_list.push_back({x, y});
    }
  }
  constexpr std::uint32_t kNone = ~0u;
  std::vector<std::uint32_t> min_pivot(static_cast<std::size_t>(n), kNone);
  const auto pivot_heads = cluster.SortedRunHeads(std::move(pivot_list),
                                                  resident, "pivot lookup");
  cluster.Deliver(pivot_heads, n, "pivot delivery");
  for (const Record& h : pivot_heads) min_pivot[h.first] = h.second;
  const auto unsettled_heads = cluster.SortedRunHeads(
      std::move(unsettled_list), resident, "unsettled lookup");
  cluster.Deliver(unsettled_heads, n, "unsettled delivery");
  std::vector<std::uint32_t> cluster_key(static_cast<std::size_t>(n), kNone);
  for (std::uint32_t k = 0; k < static_cast<std::uint32_t>(n); ++k) {
    if (status[k] & kPivot) cluster_key[k] = k;
    else cluster_key[k] = min_pivot[k];
  }
  for (const Record& h : unsettled_heads) {
    if (cluster_key[h.first] != kNone && h.second < cluster_key[h.first]) {
      cluster_key[h.first] = kNone;
    }
  }
  // Broadcast of cluster IDs back to the edge machines.
  cluster.Primitive();

  rep.passes_or_rounds = rep.primitives * rep.rounds_per_primitive;
  out.cluster_pivot.assign(static_cast<std::size_t>(n), kNoVertex);
  out.is_pivot.assign(static_cast<std::size_t>(n), 0);
  out.settled.assign(static_cast<std::size_t>(n), 0);
  for (std::uint32_t k = 0; k < static_cast<std::uint32_t>(n); ++k) {
    const VertexId v = ranks.AtKey(k);
    out.is_pivot[v] = (status[k] & kPivot) ? 1 : 0;
    out.settled[v] = (status[k] & kSettled) ? 1 : 0;
    if (cluster_key[k] != kNone) out.cluster_pivot[v] = ranks.AtKey(cluster_key[k]);
  }
  out.clustering = ClusteringFromPivots(ranks, out.cluster_pivot);
  return out;
}

}  // namespace rpivot
