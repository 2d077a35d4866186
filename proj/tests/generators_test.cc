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

#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "reference.h"
#include "rpivot/clustering.h"
#include "rpivot/generators.h"
#include "rpivot/line_graph_pivot.h"
#include "rpivot/pivot.h"
#include "rpivot/random.h"

namespace rpivot {
namespace {

TEST_CASE("erdos renyi extremes and determinism") {
  CHECK(ErdosRenyi(5, 0.0, 3).m() == 0);
  CHECK(ErdosRenyi(5, 1.0, 3) == CompleteGraph(5));
  CHECK(ErdosRenyi(30, 0.3, 8) == ErdosRenyi(30, 0.3, 8));
  CHECK_FALSE(ErdosRenyi(30, 0.3, 8) == ErdosRenyi(30, 0.3, 9));
  CHECK_THROWS_AS(ErdosRenyi(5, 1.5, 1), std::invalid_argument);
}

TEST_CASE("erdos renyi edge count is binomial") {
  constexpr int kTrials = 1000;
  const double mean = 1225 * 0.5;
  const double sd = std::sqrt(1225 * 0.25);
  double total = 0;
  for (int t = 0; t < kTrials; ++t) {
    const std::int64_t m = ErdosRenyi(50, 0.5, 1000 + t).m();
    REQUIRE(std::abs(m - mean) <= 5 * sd);
    total += static_cast<double>(m);
  }
  CHECK(std::abs(total / kTrials - mean) <= 5 * sd / std::sqrt(kTrials));
}

TEST_CASE("disjoint cliques") {
  const VertexId k3[] = {3};
  CHECK(DisjointCliques(k3) == CompleteGraph(3));
  const VertexId ones[] = {1, 1, 1};
  const Graph empty = DisjointCliques(ones);
  CHECK(empty.n() == 3);
  CHECK(empty.m() == 0);
  const VertexId two_three[] = {2, 3};
  CHECK(DisjointCliques(two_three).m() == 4);
  const VertexId zero[] = {0};
  CHECK_THROWS(DisjointCliques(zero));
}

TEST_CASE("paths, cycles, stars") {
  CHECK(PathGraph(3).m() == 2);
  CHECK(PathGraph(1).m() == 0);
  CHECK(CycleGraph(3) == CompleteGraph(3));
  CHECK(CycleGraph(5).m() == 5);
  CHECK_THROWS(CycleGraph(2));
  CHECK_THROWS(PathGraph(0));
  const Graph star = StarGraph(4);
  CHECK(star.n() == 5);
  CHECK(star.Degree(0) == 4);
}

TEST_CASE("petersen graph is 3-regular with girth 5") {
  const Graph g = PetersenGraph();
  CHECK(g.n() == 10);
  CHECK(g.m() == 15);
  for (VertexId v = 0; v < 10; ++v) CHECK(g.Degree(v) == 3);
  for (VertexId a = 0; a < 10; ++a) {
    for (VertexId b = a + 1; b < 10; ++b) {
      int common = 0;
      for (VertexId c = 0; c < 10; ++c) {
        if (c != a && c != b && ref::Adjacent(g, a, c) &&
            ref::Adjacent(g, b, c)) {
          ++common;
        }
      }
      // No triangles; adjacent pairs share no neighbor, others exactly one.
      CHECK(common == (ref::Adjacent(g, a, b) ? 0 : 1));
    }
  }
}

TEST_CASE("clique plus path shape") {
  const AdversarialInstance a = CliquePlusPath(8, 3);
  CHECK(a.graph.n() == 14);
  CHECK(a.graph.m() == 28 + 6);
  const AdversarialInstance b = CliquePlusPath(2, 1);
  CHECK(b.graph.n() == 4);
  CHECK(b.graph.m() == 3);
  // The order is a permutation increasing along the path toward the clique.
  for (VertexId v = 0; v < 14; ++v) CHECK(a.pi.Key(v) == static_cast<std::uint32_t>(v));
  CHECK(a.graph.Degree(0) == 1);
  CHECK(a.graph.HasEdge(5, 6));
  CHECK_THROWS(CliquePlusPath(1, 1));
  CHECK_THROWS(CliquePlusPath(4, 0));
}

TEST_CASE("clique plus path pivots are alternate path vertices") {
  for (int r = 1; r <= 4; ++r) {
    for (VertexId n : {2, 5, 8, 12}) {
      const AdversarialInstance inst = CliquePlusPath(n, r);
      const RPivotState run = RPivot(inst.graph, inst.pi, r);
      std::vector<VertexId> expected;
      for (VertexId v = 0; v < 2 * r; v += 2) expected.push_back(v);
      CHECK(run.pivots == expected);
      for (VertexId v = 2 * r; v < inst.graph.n(); ++v) {
        CHECK(run.cluster_pivot[v] == kNoVertex);
      }
    }
  }
}

TEST_CASE("layered parameters at the smallest valid size") {
  const LayeredParams p = ResolveLayeredParams(1, 2);
  CHECK(p.layers == 4);
  CHECK(p.alpha == 2);
  CHECK(p.top == 256);
  CHECK(p.layer_size == std::vector<std::int64_t>{32, 64, 128, 256});
  CHECK(p.right_degree == std::vector<std::int64_t>{64, 16, 4, 0});
  CHECK(p.left_degree == std::vector<std::int64_t>{0, 32, 8, 2});
  CHECK(p.host_edges == 32 * 64 + 64 * 16 + 128 * 4 + 128);

  const LayeredParams q = ResolveLayeredParams(1, 6561);
  CHECK(q.alpha == 3);
  CHECK(q.top % 54 == 0);
  CHECK(q.top >= 6561);
  CHECK(q.top == 6588);

  CHECK_THROWS_WITH_AS(ResolveLayeredParams(0, 256),
                       doctest::Contains("r must be"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(ResolveLayeredParams(1, 256, 1000),
                       doctest::Contains("edge budget"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(ResolveLayeredParams(11, 256),
                       doctest::Contains("overflow"), std::invalid_argument);
}

TEST_CASE("layered host is biregular with a top matching") {
  const LayeredHost h = BuildLayeredHost(1, 256);
  const LayeredParams& p = h.params;
  CHECK(h.host.m() == p.host_edges);
  for (VertexId v = 0; v < h.host.n(); ++v) {
    const int layer = h.layer_of[v];
    std::int64_t up = 0, down = 0, same = 0;
    for (VertexId w : h.host.Neighbors(v)) {
      const int lw = h.layer_of[w];
      if (lw == layer + 1) {
        ++up;
      } else if (lw == layer - 1) {
        ++down;
      } else if (lw == layer) {
        ++same;
      } else {
        FAIL("edge skips a layer");
      }
    }
    REQUIRE(up == p.right_degree[layer - 1]);
    REQUIRE(down == p.left_degree[layer - 1]);
    REQUIRE(same == (layer == p.layers ? 1 : 0));
  }
}

TEST_CASE("layered line graph adjacency is shared host endpoints") {
  const LayeredLineGraph lg = BuildLayeredLineGraph(1, 256);
  const Graph& g = lg.line.graph;
  const auto& he = lg.line.host_edges;
  CHECK(g.n() == lg.layered.params.host_edges);
  CHECK(g.m() == lg.layered.params.line_graph_edges);
  for (VertexId a = 0; a < g.n(); ++a) {
    std::set<VertexId> nb(g.Neighbors(a).begin(), g.Neighbors(a).end());
    for (VertexId b = 0; b < g.n(); ++b) {
      if (a == b) continue;
      const bool share = he[a].u == he[b].u || he[a].u == he[b].v ||
                         he[a].v == he[b].u || he[a].v == he[b].v;
      REQUIRE(share == (nb.count(b) > 0));
    }
  }
}

TEST_CASE("pivot sets on the line graph are host matchings") {
  const LayeredLineGraph lg = BuildLayeredLineGraph(1, 256);
  const auto& he = lg.line.host_edges;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const RankAssignment pi = RandomPermutation(lg.line.graph.n(), seed);
    const PivotRun run = SequentialPivot(lg.line.graph, pi);
    std::vector<char> covered(
        static_cast<std::size_t>(lg.layered.host.n()), 0);
    for (VertexId p : run.pivots) {
      REQUIRE(!covered[he[p].u]);
      REQUIRE(!covered[he[p].v]);
      covered[he[p].u] = covered[he[p].v] = 1;
    }
    // Maximal: every host edge touches a matched vertex.
    for (const Edge& e : he) REQUIRE((covered[e.u] || covered[e.v]));
  }
}

TEST_CASE("line graph pivot counter matches runs on the materialized graph") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng = MakeRng(seed, 5);
    const VertexId n = 2 + static_cast<VertexId>(UniformBelow(rng, 20));
    const Graph host = ErdosRenyi(n, 0.3, seed);
    if (host.m() == 0) continue;
    const LineGraphResult line = LineGraph(host);
    const LineGraphPivotCounter counter(host, line.host_edges);
    const RankAssignment pi = RandomPermutation(line.graph.n(), rng);
    std::vector<std::uint32_t> key(pi.keys().begin(), pi.keys().end());
    const int r = 1 + static_cast<int>(seed % 3);
    std::vector<char> full, truncated;
    counter.Run(key, r, &full, &truncated);
    const ref::Run piv = ref::SequentialPivot(line.graph, pi);
    const ref::Run rpiv = ref::RPivot(line.graph, pi, r);
    for (VertexId e = 0; e < line.graph.n(); ++e) {
      REQUIRE(bool(full[e]) == (piv.pivots.count(e) > 0));
      REQUIRE(bool(truncated[e]) == (rpiv.pivots.count(e) > 0));
    }
    const LineGraphPivotCounts counts = counter.Count(key, r);
    CHECK(counts.full == static_cast<std::int64_t>(piv.pivots.size()));
    CHECK(counts.truncated == static_cast<std::int64_t>(rpiv.pivots.size()));
  }
}

TEST_CASE("line graph budget") {
  CHECK_THROWS_WITH_AS(LineGraph(CompleteGraph(30), 100),
                       doctest::Contains("budget"), std::invalid_argument);
}

}  // namespace
}  // namespace rpivot
