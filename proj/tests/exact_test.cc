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

#include <set>
#include <stdexcept>

#include "doctest.h"
#include "reference.h"
#include "rpivot/clustering.h"
#include "rpivot/exact.h"
#include "rpivot/generators.h"
#include "rpivot/random.h"

namespace rpivot {
namespace {

TEST_CASE("brute force opt examples") {
  const VertexId sizes[] = {3, 2};
  CHECK(BruteForceOpt(DisjointCliques(sizes)).cost == 0);
  CHECK(BruteForceOpt(PathGraph(3)).cost == 1);
  const OptResult c5 = BruteForceOpt(CycleGraph(5));
  CHECK(c5.cost == 3);
  CHECK(ClusteringCost(CycleGraph(5), c5.witness) == 3);
  CHECK(BruteForceOpt(PetersenGraph()).cost == 10);
  CHECK(BruteForceOpt(Graph::Build(0, {})).cost == 0);
}

TEST_CASE("brute force opt matches labeling enumeration") {
  CHECK(ref::OptByLabeling(CycleGraph(5)) == 3);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const VertexId n = 1 + static_cast<VertexId>(seed % 7);
    const Graph g = ErdosRenyi(n, 0.5, seed);
    const OptResult opt = BruteForceOpt(g);
    REQUIRE(opt.cost == ref::OptByLabeling(g));
    REQUIRE(ref::Cost(g, opt.witness) == opt.cost);
  }
}

TEST_CASE("brute force opt beats random clusterings") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = ErdosRenyi(11, 0.4, seed);
    const OptResult opt = BruteForceOpt(g);
    REQUIRE(ClusteringCost(g, opt.witness) == opt.cost);
    Rng rng = MakeRng(seed, 3);
    for (int i = 0; i < 100; ++i) {
      std::vector<std::int64_t> labels(11);
      for (auto& l : labels) l = static_cast<std::int64_t>(UniformBelow(rng, 5));
      REQUIRE(opt.cost <= ClusteringCost(g, Clustering::FromLabels(labels)));
    }
  }
}

TEST_CASE("brute force opt guard") {
  CHECK_THROWS_WITH_AS(BruteForceOpt(PathGraph(14)),
                       doctest::Contains("Monte-Carlo"),
                       std::invalid_argument);
  // Seven matched pairs leave the six linking edges cut.
  CHECK(BruteForceOpt(PathGraph(14), 14).cost == 6);
}

TEST_CASE("bad triangles") {
  CHECK(BadTriangles(CompleteGraph(3)).empty());
  const auto p3 = BadTriangles(PathGraph(3));
  REQUIRE(p3.size() == 1);
  CHECK(p3[0].a == 0);
  CHECK(p3[0].b == 1);
  CHECK(p3[0].c == 2);
  CHECK(p3[0].center == 1);
  CHECK(BadTriangles(CycleGraph(5)).size() == 5);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = ErdosRenyi(12, 0.4, seed);
    std::set<std::tuple<VertexId, VertexId, VertexId>> want;
    for (VertexId a = 0; a < 12; ++a) {
      for (VertexId b = a + 1; b < 12; ++b) {
        for (VertexId c = b + 1; c < 12; ++c) {
          const int edges = ref::Adjacent(g, a, b) + ref::Adjacent(g, a, c) +
                            ref::Adjacent(g, b, c);
          if (edges == 2) want.insert({a, b, c});
        }
      }
    }
    std::set<std::tuple<VertexId, VertexId, VertexId>> got;
    for (const BadTriangle& t : BadTriangles(g)) got.insert({t.a, t.b, t.c});
    REQUIRE(got == want);
  }
}

TEST_CASE("triangle packing is a lower bound") {
  CHECK(GreedyTrianglePacking(CompleteGraph(3), 1).count == 0);
  CHECK(GreedyTrianglePacking(PathGraph(3), 1).count == 1);
  CHECK(BruteForceOpt(PathGraph(3)).cost == 1);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = ErdosRenyi(12, 0.4, seed);
    const TrianglePacking pack = GreedyTrianglePacking(g, seed);
    REQUIRE(pack.count == static_cast<std::int64_t>(pack.triangles.size()));
    std::set<std::pair<VertexId, VertexId>> used;
    for (const BadTriangle& t : pack.triangles) {
      const int edges = ref::Adjacent(g, t.a, t.b) + ref::Adjacent(g, t.a, t.c) +
                        ref::Adjacent(g, t.b, t.c);
      REQUIRE(edges == 2);
      for (auto p : {std::pair{t.a, t.b}, std::pair{t.a, t.c},
                     std::pair{t.b, t.c}}) {
        REQUIRE(used.insert(p).second);
      }
    }
    REQUIRE(pack.count <= BruteForceOpt(g).cost);
  }
}

TEST_CASE("edge-disjoint bad triangles can exceed opt") {
  // x and z are non-adjacent and both see every vertex of a clique. The
  // triangles {x, y_i, z} share no edge, yet one cluster errs only on xz.
  const VertexId m = 5;
  const VertexId x = m, z = m + 1;
  std::vector<Edge> edges;
  for (VertexId i = 0; i < m; ++i) {
    for (VertexId j = i + 1; j < m; ++j) edges.push_back({i, j});
    edges.push_back({x, i});
    edges.push_back({z, i});
  }
  const Graph g = Graph::Build(m + 2, edges);
  CHECK(BruteForceOpt(g).cost == 1);
  int edge_disjoint = 0;
  for (const BadTriangle& t : BadTriangles(g)) {
    edge_disjoint += (t.a == x || t.b == x || t.c == x) &&
                     (t.a == z || t.b == z || t.c == z);
  }
  CHECK(edge_disjoint == m);
  CHECK(GreedyTrianglePacking(g, 3).count == 1);
}

TEST_CASE("expected cost") {
  const VertexId sizes[] = {3, 3};
  const Graph cliques = DisjointCliques(sizes);
  const CostEstimate zero =
      ExpectedCostMC(cliques, {Algorithm::kRPivot, 1, 3}, 100, 1);
  CHECK(zero.mean == 0);
  CHECK(zero.stderr_mean == 0);
  CHECK(zero.trials == 100);

  const CostEstimate p3 =
      ExpectedCostMC(PathGraph(3), {Algorithm::kPivot, 1, 3}, 50, 2);
  CHECK(p3.mean == 1);
  CHECK(p3.stderr_mean == 0);
  const CostEstimate p3x =
      ExpectedCostExhaustive(PathGraph(3), {Algorithm::kPivot, 1, 3});
  CHECK(p3x.trials == 6);
  CHECK(p3x.mean == 1);

  // C5 average over all 120 orders, against the reference Pivot.
  const Graph c5 = CycleGraph(5);
  double total = 0;
  ForEachPermutation(5, [&](const RankAssignment& pi) {
    total += static_cast<double>(ref::Cost(c5, ref::SequentialPivot(c5, pi).label));
  });
  const CostEstimate c5x = ExpectedCostExhaustive(c5, {Algorithm::kPivot, 1, 3});
  CHECK(c5x.exhaustive);
  CHECK(c5x.mean == doctest::Approx(total / 120));
  CHECK(c5x.mean == doctest::Approx(3.0));

  CHECK_THROWS(ExpectedCostMC(c5, {Algorithm::kPivot, 1, 3}, 1, 1));
  CHECK_THROWS(ExpectedCostExhaustive(c5, {Algorithm::kRPivotVariant, 1, 3}));
}

TEST_CASE("exhaustive ratio sample on C5") {
  const RatioSample s = SampleRatio(CycleGraph(5), 1, std::nullopt, 0);
  CHECK(s.exhaustive);
  CHECK(s.trials == 120);
  CHECK(s.pivot_cost.mean() == doctest::Approx(3.0));
  CHECK(s.rpivot_cost.mean() == doctest::Approx(10.0 / 3));
  CHECK(s.extra_mistakes.mean() == doctest::Approx(1.0 / 3));
}

TEST_CASE("monte carlo results do not depend on the thread count") {
  const Graph g = PetersenGraph();
  const CostEstimate a = ExpectedCostMC(g, {Algorithm::kRPivot, 1, 3}, 500, 4, 1);
  const CostEstimate b = ExpectedCostMC(g, {Algorithm::kRPivot, 1, 3}, 500, 4, 3);
  CHECK(a.mean == b.mean);
  CHECK(a.stderr_mean == b.stderr_mean);
  const RatioSample x = SampleRatio(g, 2, 400, 5, 1);
  const RatioSample y = SampleRatio(g, 2, 400, 5, 4);
  CHECK(x.extra_mistakes.mean() == y.extra_mistakes.mean());
  CHECK(x.rpivot_cost.stderr_mean() == y.rpivot_cost.stderr_mean());
}

TEST_CASE("permutation enumeration") {
  for (VertexId n = 0; n <= 6; ++n) {
    std::set<std::vector<std::uint32_t>> seen;
    ForEachPermutation(n, [&](const RankAssignment& pi) {
      seen.insert({pi.keys().begin(), pi.keys().end()});
    });
    CHECK(static_cast<std::int64_t>(seen.size()) == ref::Factorial(n));
  }
  CHECK_THROWS(ForEachPermutation(9, [](const RankAssignment&) {}));
}

}  // namespace
}  // namespace rpivot
