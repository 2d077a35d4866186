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


#include <sstream>
#include <stdexcept>

#include "rpivot/executors.h"
#include "rpivot/random.h"

namespace rpivot {

FileEdgeStream::FileEdgeStream(std::string path) : path_(std::move(path)) {
  Reset();
}

void FileEdgeStream::Reset() {
  in_.close();
  in_.clear();
  in_.open(path_);
  if (!in_) throw std::runtime_error("cannot open edge stream '" + path_ + "'");
  line_ = 0;
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    long long n = 0, m = 0;
    if (ss >> n) {
      if (!(ss >> m) || n < 0) {
        throw std::runtime_error(path_ + ":" + std::to_string(line_) +
                                 ": expected header 'n m'");
      }
      n_ = static_cast<VertexId>(n);
      return;
    }
  }
  throw std::runtime_error(path_ + ": missing header");
}

bool FileEdgeStream::Next(Edge& e) {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    long long a = 0, b = 0;
    if (!(ss >> a)) continue;
    if (!(ss >> b)) {
      throw std::runtime_error(path_ + ":" + std::to_string(line_) +
                               ": edge line needs two endpoints");
    }
    e = {static_cast<VertexId>(a), static_cast<VertexId>(b)};
    return true;
  }
  return false;
}

ExecutorResult StreamingExecute(EdgeStream& stream, VertexId n,
                                const RankAssignment& pi, int r) {
  if (r < 1) throw std::invalid_argument("streaming r-Pivot needs r >= 1");
  if (pi.n() != n) {
    throw std::invalid_argument("rank assignment does not cover n vertices");
  }
  enum : std::uint8_t { kSettled = 1, kPivot = 2, kNew = 4 };

  ExecutorResult out;
  ResourceReport& rep = out.report;
  rep.model = "streaming";
  // Per-vertex registers; the rank register is pi itself.
  std::int64_t words = n;
  std::vector<std::uint8_t> flags(static_cast<std::size_t>(n), 0);
  words += n;
  std::vector<VertexId> eta(static_cast<std::size_t>(n), kNoVertex);
  words += n;
  rep.peak_memory_words = words;

  std::int64_t first_count = -1;
  std::uint64_t first_hash = 0;
  auto pass = [&](auto&& on_edge) {
    stream.Reset();
    ++rep.passes_or_rounds;
    std::int64_t count = 0;
    std::uint64_t hash = 0;
    Edge e;
    while (stream.Next(e)) {
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
        throw std::invalid_argument(
            "stream edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
            "} has an endpoint outside [0, " + std::to_string(n) + ")");
      }
      if (e.u == e.v) {
        throw std::invalid_argument("stream contains self-loop on " +
                                    std::to_string(e.u));
      }
      ++count;
      hash += SplitMix64(PairKey(e.u, e.v));
      on_edge(e.u, e.v);
    }
    if (first_count < 0) {
      first_count = count;
      first_hash = hash;
    } else if (count != first_count || hash != first_hash) {
      throw std::runtime_error(
          "edge stream changed between passes (pass " +
          std::to_string(rep.passes_or_rounds) + " saw " +
          std::to_string(count) + " edges, pass 1 saw " +
          std::to_string(first_count) + ")");
    }
  };
  auto unsettled = [&](VertexId v) { return !(flags[v] & kSettled); };

  for (int t = 1; t <= r; ++t) {
    for (VertexId v = 0; v < n; ++v) eta[v] = unsettled(v) ? v : kNoVertex;
    pass([&](VertexId u, VertexId v) {
      if (!unsettled(u) || !unsettled(v)) return;
      if (pi.Less(u, eta[v])) eta[v] = u;
      if (pi.Less(v, eta[u])) eta[u] = v;
    });
    for (VertexId v = 0; v < n; ++v) {
      if (unsettled(v) && eta[v] == v) flags[v] |= kSettled | kPivot | kNew;
    }
    pass([&](VertexId u, VertexId v) {
      if ((flags[u] & kNew) && unsettled(v)) flags[v] |= kSettled;
      if ((flags[v] & kNew) && unsettled(u)) flags[u] |= kSettled;
    });
    for (auto& f : flags) f &= ~kNew;
  }

  // Final pass: lowest pivot neighbor and lowest unsettled neighbor.
  std::vector<VertexId> min_pivot(static_cast<std::size_t>(n), kNoVertex);
  words += n;
  std::vector<VertexId>& min_unsettled = eta;  // reuses the eta register
  std::fill(min_unsettled.begin(), min_unsettled.end(), kNoVertex);
  rep.peak_memory_words = std::max(rep.peak_memory_words, words);
  auto better = [&](VertexId cand, VertexId cur) {
    return cur == kNoVertex || pi.Less(cand, cur);
  };
  pass([&](VertexId u, VertexId v) {
    for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
      if (flags[a] & kPivot) continue;
      if ((flags[b] & kPivot) && better(b, min_pivot[a])) min_pivot[a] = b;
      if (unsettled(b) && better(b, min_unsettled[a])) min_unsettled[a] = b;
    }
  });

  out.cluster_pivot.assign(static_cast<std::size_t>(n), kNoVertex);
  out.is_pivot.assign(static_cast<std::size_t>(n), 0);
  out.settled.assign(static_cast<std::size_t>(n), 0);
  for (VertexId v = 0; v < n; ++v) {
    out.is_pivot[v] = (flags[v] & kPivot) ? 1 : 0;
    out.settled[v] = (flags[v] & kSettled) ? 1 : 0;
    if (out.is_pivot[v]) {
      out.cluster_pivot[v] = v;
    } else if (min_pivot[v] != kNoVertex &&
               (min_unsettled[v] == kNoVertex ||
                !pi.Less(min_unsettled[v], min_pivot[v]))) {
      out.cluster_pivot[v] = min_pivot[v];
    }
  }
  out.clustering = ClusteringFromPivots(pi, out.cluster_pivot);
  return out;
}

}  // namespace rpivot
