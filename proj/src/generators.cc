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

#include "rpivot/generators.h"

#include <limits>
#include <numeric>
#include <stdexcept>

#include "rpivot/random.h"

namespace rpivot {

Graph ErdosRenyi(VertexId n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("ErdosRenyi: p must lie in [0, 1]");
  }
  Rng rng = MakeRng(seed);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (UniformUnit(rng) < p) edges.push_back({u, v});
    }
  }
  return Graph::Build(n, edges);
}

Graph DisjointCliques(std::span<const VertexId> sizes) {
  std::vector<Edge> edges;
  VertexId base = 0;
  for (VertexId s : sizes) {
    if (s < 1) throw std::invalid_argument("clique sizes must be >= 1");
    for (VertexId i = 0; i < s; ++i) {
      for (VertexId j = i + 1; j < s; ++j) edges.push_back({base + i, base + j});
    }
    base += s;
  }
  return Graph::Build(base, edges);
}

Graph CompleteGraph(VertexId n) {
  const VertexId sizes[] = {n};
  return DisjointCliques(sizes);
}

Graph PathGraph(VertexId n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::Build(n, edges);
}

Graph CycleGraph(VertexId n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph::Build(n, edges);
}

Graph StarGraph(VertexId leaves) {
  if (leaves < 0) throw std::invalid_argument("star needs leaves >= 0");
  std::vector<Edge> edges;
  for (VertexId v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph::Build(leaves + 1, edges);
}

Graph PetersenGraph() {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return Graph::Build(10, edges);
}

AdversarialInstance CliquePlusPath(VertexId clique_size, int rounds) {
  if (clique_size < 2) throw std::invalid_argument("clique size must be >= 2");
  if (rounds < 1) throw std::invalid_argument("rounds must be >= 1");
  const VertexId path = 2 * rounds;
  const VertexId n = clique_size + path;
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < path; ++v) edges.push_back({v, v + 1});
  edges.push_back({path - 1, path});
  for (VertexId a = path; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) edges.push_back({a, b});
  }
  AdversarialInstance out;
  out.graph = Graph::Build(n, edges);
  out.pi = RankAssignment::Identity(n);
  out.metadata = {{"clique_size", clique_size},
                  {"rounds", rounds},
                  {"path_vertices", path},
                  {"n", n}};
  return out;
}

namespace {

constexpr std::int64_t kSaturated = std::numeric_limits<std::int64_t>::max();

// a^e, saturating at kSaturated.
std::int64_t SatPow(std::int64_t a, int e) {
  std::int64_t out = 1;
  for (int i = 0; i < e; ++i) {
    if (out > kSaturated / a) return kSaturated;
    out *= a;
  }
  return out;
}

// Largest a >= 2 with a^exp <= top; 2 when even 2^exp exceeds top.
std::int64_t AlphaFor(std::int64_t top, int exp) {
  std::int64_t a = 2;
  while (SatPow(a + 1, exp) <= top) ++a;
  return a;
}

std::int64_t RoundUpTo(std::int64_t x, std::int64_t step) {
  if (x % step == 0) return x;
  if (x > kSaturated - step) return kSaturated;
  return (x / step + 1) * step;
}

}  // namespace

LayeredParams ResolveLayeredParams(int rounds, std::int64_t requested_top,
                                   std::int64_t edge_budget) {
  if (rounds < 1) throw std::invalid_argument("layered graph: r must be >= 1");
  if (requested_top < 2) {
    throw std::invalid_argument("layered graph: N must be >= 2");
  }
  const int t = 2 * rounds + 2;
  std::int64_t top = requested_top;
  std::int64_t alpha = 0;
  for (int guard = 0;; ++guard) {
    if (guard > 64) {
      throw std::invalid_argument("layered graph: no integral N found");
    }
    alpha = AlphaFor(top, 3 * t - 4);
    const std::int64_t min_top = SatPow(alpha, 3 * t - 4);
    const std::int64_t unit = SatPow(alpha, t - 1);
    if (min_top == kSaturated || unit == kSaturated) {
      throw std::invalid_argument(
          "layered graph: alpha^(3t-4) overflows 64 bits for r=" +
          std::to_string(rounds));
    }
    const std::int64_t step = std::lcm<std::int64_t>(2, unit);
    const std::int64_t candidate = RoundUpTo(std::max(top, min_top), step);
    if (candidate == kSaturated) {
      throw std::invalid_argument("layered graph: N overflows 64 bits");
    }
    if (AlphaFor(candidate, 3 * t - 4) == alpha) {
      top = candidate;
      break;
    }
    top = candidate;
  }

  LayeredParams p;
  p.rounds = rounds;
  p.layers = t;
  p.requested_top = requested_top;
  p.top = top;
  p.alpha = alpha;
  p.layer_size.resize(t);
  p.right_degree.assign(t, 0);
  p.left_degree.assign(t, 0);
  for (int i = 1; i <= t; ++i) {
    p.layer_size[i - 1] = top / SatPow(alpha, t - i);
    if (i < t) p.right_degree[i - 1] = SatPow(alpha, 2 * (t - i));
    if (i > 1) p.left_degree[i - 1] = SatPow(alpha, 2 * (t - i) + 1);
  }
  __int128 host_edges = top / 2;
  __int128 line_edges = 0;
  for (int i = 1; i <= t; ++i) {
    const std::int64_t size = p.layer_size[i - 1];
    if (i < t) {
      const __int128 lhs = static_cast<__int128>(size) * p.right_degree[i - 1];
      const __int128 rhs =
          static_cast<__int128>(p.layer_size[i]) * p.left_degree[i];
      if (lhs != rhs) {
        throw std::invalid_argument("layered graph: degree balance fails "
                                    "between layers " + std::to_string(i) +
                                    " and " + std::to_string(i + 1));
      }
      if (p.right_degree[i - 1] > p.layer_size[i] ||
          p.left_degree[i] > size) {
        throw std::invalid_argument("layered graph: layer " +
                                    std::to_string(i) +
                                    " too small for a simple wiring");
      }
      host_edges += lhs;
    }
    const __int128 deg =
        p.left_degree[i - 1] + p.right_degree[i - 1] + (i == t ? 1 : 0);
    line_edges += static_cast<__int128>(size) * deg * (deg - 1) / 2;
  }
  if (host_edges > edge_budget) {
    throw std::invalid_argument(
        "layered graph: host has more than the edge budget of " +
        std::to_string(edge_budget) + " edges (alpha=" +
        std::to_string(alpha) + ", N=" + std::to_string(top) + ")");
  }
  p.host_edges = static_cast<std::int64_t>(host_edges);
  p.line_graph_edges = line_edges > kSaturated
                           ? kSaturated
                           : static_cast<std::int64_t>(line_edges);
  return p;
}

LayeredHost BuildLayeredHost(int rounds, std::int64_t requested_top,
                             std::int64_t edge_budget) {
  LayeredHost out;
  out.params = ResolveLayeredParams(rounds, requested_top, edge_budget);
  const LayeredParams& p = out.params;
  const int t = p.layers;
  std::vector<std::int64_t> base(t + 1, 0);
  for (int i = 1; i <= t; ++i) base[i] = base[i - 1] + p.layer_size[i - 1];
  const std::int64_t n = base[t];
  if (n > std::numeric_limits<VertexId>::max()) {
    throw std::invalid_argument("layered graph: too many host vertices");
  }
  out.layer_of.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= t; ++i) {
    for (std::int64_t v = base[i - 1]; v < base[i]; ++v) out.layer_of[v] = i;
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p.host_edges));
  for (int i = 1; i < t; ++i) {
    const std::int64_t a = p.layer_size[i - 1];
    const std::int64_t b = p.layer_size[i];
    const std::int64_t d = p.right_degree[i - 1];
    for (std::int64_t j = 0; j < a; ++j) {
      for (std::int64_t k = 0; k < d; ++k) {
        const std::int64_t target = (j * d + k) % b;
        edges.push_back({static_cast<VertexId>(base[i - 1] + j),
                         static_cast<VertexId>(base[i] + target)});
      }
    }
  }
  for (std::int64_t j = 0; j + 1 < p.layer_size[t - 1]; j += 2) {
    edges.push_back({static_cast<VertexId>(base[t - 1] + j),
                     static_cast<VertexId>(base[t - 1] + j + 1)});
  }
  out.host = Graph::Build(static_cast<VertexId>(n), edges);
  if (out.host.m() != p.host_edges) {
    throw InvariantViolation("layered wiring produced duplicate edges");
  }
  return out;
}

LineGraphResult LineGraph(const Graph& host, std::int64_t edge_budget) {
  __int128 total = 0;
  for (VertexId x = 0; x < host.n(); ++x) {
    const __int128 d = host.Degree(x);
    total += d * (d - 1) / 2;
  }
  if (total > edge_budget) {
    throw std::invalid_argument("line graph would have more than the edge "
                                "budget of " + std::to_string(edge_budget) +
                                " edges");
  }
  LineGraphResult out;
  out.host_edges = host.Edges();
  std::vector<std::vector<VertexId>> incident(host.n());
  for (std::size_t i = 0; i < out.host_edges.size(); ++i) {
    incident[out.host_edges[i].u].push_back(static_cast<VertexId>(i));
    incident[out.host_edges[i].v].push_back(static_cast<VertexId>(i));
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(total));
  for (const auto& inc : incident) {
    for (std::size_t a = 0; a < inc.size(); ++a) {
      for (std::size_t b = a + 1; b < inc.size(); ++b) {
        edges.push_back({inc[a], inc[b]});
      }
    }
  }
  out.graph =
      Graph::Build(static_cast<VertexId>(out.host_edges.size()), edges);
  return out;
}

LayeredLineGraph BuildLayeredLineGraph(int rounds, std::int64_t requested_top,
                                       std::int64_t edge_budget) {
  LayeredLineGraph out;
  out.layered = BuildLayeredHost(rounds, requested_top, edge_budget);
  out.line = LineGraph(out.layered.host, edge_budget);
  return out;
}

}  // namespace rpivot
