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


// Resource-accounted single-process simulations of r-Pivot in four models:
// multi-pass streaming, LOCAL, MPC and local computation (LCA). Each one
// reproduces the reference clustering from pivot.h exactly.

#ifndef RPIVOT_EXECUTORS_H_
#define RPIVOT_EXECUTORS_H_

#include <cstdint>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "rpivot/clustering.h"
#include "rpivot/graph.h"
#include "rpivot/pivot.h"
#include "rpivot/rank.h"

namespace rpivot {

struct ResourceReport {
  std::string model;
  std::int64_t passes_or_rounds = 0;
  std::int64_t peak_memory_words = 0;      // streaming
  std::int64_t max_message_bits = 0;       // LOCAL
  std::int64_t total_messages = 0;         // LOCAL
  std::int64_t max_machine_load_words = 0; // MPC
  std::int64_t machine_count = 0;          // MPC
  std::int64_t machine_capacity_words = 0; // MPC: S
  std::int64_t primitives = 0;             // MPC: sort / join invocations
  std::int64_t rounds_per_primitive = 0;   // MPC: k * ceil(1/delta)
  std::int64_t booked_round_constant = 0;  // MPC: k
  std::int64_t probes = 0;                 // LCA
};

struct ExecutorResult {
  Clustering clustering;
  // Same convention as RPivotState::cluster_pivot.
  std::vector<VertexId> cluster_pivot;
  std::vector<char> is_pivot;
  std::vector<char> settled;
  ResourceReport report;
};

// ---------------------------------------------------------------------------
// Streaming.

class EdgeStream {
 public:
  virtual ~EdgeStream() = default;
  // Starts a new pass.
  virtual void Reset() = 0;
  virtual bool Next(Edge& e) = 0;
};

class VectorEdgeStream : public EdgeStream {
 public:
  explicit VectorEdgeStream(std::vector<Edge> edges)
      : edges_(std::move(edges)) {}
  void Reset() override { pos_ = 0; }
  bool Next(Edge& e) override {
    if (pos_ == edges_.size()) return false;
    e = edges_[pos_++];
    return true;
  }

 private:
  std::vector<Edge> edges_;
  std::size_t pos_ = 0;
};

// Streams the edge lines of a graph text file (integer IDs), re-reading the
// file on every pass.
class FileEdgeStream : public EdgeStream {
 public:
  explicit FileEdgeStream(std::string path);
  void Reset() override;
  bool Next(Edge& e) override;
  VertexId n() const { return n_; }

 private:
  std::string path_;
  std::ifstream in_;
  VertexId n_ = 0;
  int line_ = 0;
};

// 2r + 1 passes. Throws std::invalid_argument on an out-of-range endpoint or
// self-loop, and std::runtime_error if a pass sees a different edge multiset
// than the first one.
ExecutorResult StreamingExecute(EdgeStream& stream, VertexId n,
                                const RankAssignment& pi, int r);

// ---------------------------------------------------------------------------
// LOCAL.

struct LocalOptions {
  // Ties between equal ranks go to the larger ID. Deliberately wrong; used
  // to check that the equivalence suite notices.
  bool corrupt_tie_break = false;
};

struct LocalVertexState {
  bool settled = false;
  bool pivot = false;
  VertexId cluster_pivot = kNoVertex;  // valid once finished
};

// Synchronous message passing: round 2t-1 sends ranks of unsettled vertices,
// round 2t announces new pivots, round 2r+1 exchanges final status.
class LocalSimulation {
 public:
  LocalSimulation(const Graph& g, const RankAssignment& ranks, int r,
                  LocalOptions options = {});

  // One synchronous round. Returns false once all 2r+1 rounds are done.
  bool Step();
  int round() const { return round_; }
  int total_rounds() const { return 2 * r_ + 1; }
  const LocalVertexState& state(VertexId v) const { return state_[v]; }
  const ResourceReport& report() const { return report_; }
  ExecutorResult Finish();

 private:
  struct Message {
    VertexId from;
    std::uint8_t tag;
    uint128 rank;
  };
  bool Precedes(VertexId a, VertexId b) const;
  void Send(VertexId from, VertexId to, std::uint8_t tag, bool with_rank);

  const Graph* g_;
  const RankAssignment* ranks_;
  int r_;
  LocalOptions options_;
  int round_ = 0;
  int rank_bits_ = 0;
  std::vector<LocalVertexState> state_;
  std::vector<char> new_pivot_;
  std::vector<std::vector<Message>> inbox_;
  ResourceReport report_;
};

// Ranks must be integer ranks.
ExecutorResult LocalExecute(const Graph& g, const RankAssignment& ranks,
                            int r, LocalOptions options = {});

// Bits of a LOCAL message: a 2-bit tag plus, when present, a rank field of
// BitWidth(rank range) bits.
int LocalMessageBits(const RankAssignment& ranks, bool with_rank);

// ---------------------------------------------------------------------------
// MPC.

// Each sort, join or broadcast primitive is booked as k * ceil(1/delta)
// rounds with this k.
inline constexpr int kMpcRoundsPerPrimitive = 1;

// Machine capacity S = ceil(n^delta) words. Throws std::invalid_argument if
// delta is outside (0, 1] or S cannot hold one two-word record; throws
// InvariantViolation if any machine ever holds more than S words.
ExecutorResult MpcExecute(const Graph& g, const RankAssignment& ranks, int r,
                          double delta);

std::int64_t MpcCapacity(VertexId n, double delta);

// ---------------------------------------------------------------------------
// LCA.

// Graph access through counted degree and i-th neighbor probes.
class ProbeOracle {
 public:
  explicit ProbeOracle(const Graph& g) : g_(&g) {}
  VertexId n() const { return g_->n(); }
  std::int32_t Degree(VertexId v);
  VertexId Neighbor(VertexId v, std::int32_t i);
  std::int64_t probes() const { return probes_; }
  void ResetProbes() { probes_ = 0; }

 private:
  const Graph* g_;
  std::int64_t probes_ = 0;
};

struct LcaAnswer {
  // The pivot whose cluster v is in, or v itself for a singleton non-pivot.
  VertexId cluster = kNoVertex;
  bool pivot = false;
  ResourceReport report;
  std::int64_t ball_vertices = 0;
};

// Explores the ball of radius 2r + 2 around v (probing every vertex at
// distance at most 2r + 1) and runs r-Pivot on it.
LcaAnswer LcaQuery(ProbeOracle& oracle, const RankAssignment& ranks, int r,
                   VertexId v);

// Queries every vertex and assembles the clustering.
ExecutorResult LcaExecuteAll(const Graph& g, const RankAssignment& ranks,
                             int r);

// Σ (deg + 1) over vertices within distance `radius` of v, by plain BFS.
std::int64_t BallProbeBound(const Graph& g, VertexId v, int radius);

// Vertices within distance `radius` of v, increasing ID.
std::vector<VertexId> Ball(const Graph& g, VertexId v, int radius);

}  // namespace rpivot

#endif  // RPIVOT_EXECUTORS_H_
