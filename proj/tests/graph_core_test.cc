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
#include <map>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "reference.h"
#include "rpivot/clustering.h"
#include "rpivot/generators.h"
#include "rpivot/graph.h"
#include "rpivot/graph_io.h"
#include "rpivot/random.h"
#include "rpivot/rank.h"

namespace rpivot {
namespace {

Graph P3() {
  const Edge e[] = {{0, 1}, {1, 2}};
  return Graph::Build(3, e);
}

void CheckCanonical(const Graph& g) {
  std::int64_t degree_sum = 0;
  for (VertexId v = 0; v < g.n(); ++v) {
    const auto nb = g.Neighbors(v);
    degree_sum += static_cast<std::int64_t>(nb.size());
    for (std::size_t i = 0; i < nb.size(); ++i) {
      REQUIRE(nb[i] != v);
      if (i > 0) REQUIRE(nb[i - 1] < nb[i]);
      REQUIRE(ref::Adjacent(g, nb[i], v));
    }
  }
  REQUIRE(degree_sum == 2 * g.m());
}

TEST_CASE("build collapses duplicates and rejects bad pairs") {
  const Graph p3 = P3();
  CHECK(p3.n() == 3);
  CHECK(p3.m() == 2);
  const Edge dup[] = {{0, 1}, {1, 2}, {1, 0}};
  CHECK(Graph::Build(3, dup) == p3);
  const Graph single = Graph::Build(1, {});
  CHECK(single.n() == 1);
  CHECK(single.m() == 0);

  const Edge loop[] = {{1, 1}};
  CHECK_THROWS_AS(Graph::Build(3, loop), std::invalid_argument);
  const Edge far[] = {{0, 3}};
  CHECK_THROWS_WITH_AS(Graph::Build(3, far), doctest::Contains("3"),
                       std::invalid_argument);
}

TEST_CASE("random graphs are canonical") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng = MakeRng(seed);
    const VertexId n = 1 + static_cast<VertexId>(UniformBelow(rng, 30));
    std::vector<Edge> edges;
    for (int i = 0; i < 3 * n; ++i) {
      const auto u = static_cast<VertexId>(UniformBelow(rng, n));
      const auto v = static_cast<VertexId>(UniformBelow(rng, n));
      if (u != v) edges.push_back({u, v});
    }
    CheckCanonical(Graph::Build(n, edges));
  }
}

TEST_CASE("has edge") {
  const Graph p3 = P3();
  CHECK(p3.HasEdge(0, 1));
  CHECK(p3.HasEdge(1, 0));
  CHECK_FALSE(p3.HasEdge(0, 2));
  CHECK_THROWS(p3.HasEdge(1, 1));
  const Graph k3 = CompleteGraph(3);
  CHECK(k3.HasEdge(0, 1));
  CHECK(k3.HasEdge(0, 2));
  CHECK(k3.HasEdge(1, 2));
}

TEST_CASE("clustering cost examples") {
  CHECK(ClusteringCost(CompleteGraph(3), Clustering::OneCluster(3)) == 0);
  CHECK(ClusteringCost(P3(), Clustering::OneCluster(3)) == 1);
  CHECK(ClusteringCost(CycleGraph(5), Clustering::Singletons(5)) == 5);
}

TEST_CASE("clustering cost matches a pair scan") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng = MakeRng(seed, 1);
    const VertexId n = 1 + static_cast<VertexId>(UniformBelow(rng, 25));
    const Graph g = ErdosRenyi(n, 0.4, seed);
    std::vector<std::int64_t> labels(static_cast<std::size_t>(n));
    for (auto& l : labels) l = static_cast<std::int64_t>(UniformBelow(rng, 4));
    const Clustering c = Clustering::FromLabels(labels);
    CHECK(ClusteringCost(g, c) == ref::Cost(g, c));
    CHECK(ClusteringCost(g, Clustering::Singletons(n)) == g.m());
    CHECK(ClusteringCost(g, Clustering::OneCluster(n)) ==
          static_cast<std::int64_t>(n) * (n - 1) / 2 - g.m());
  }
}

TEST_CASE("cost is 64-bit") {
  const VertexId n = 100'000;
  const std::int64_t expected = static_cast<std::int64_t>(n) * (n - 1) / 2;
  CHECK(expected > (std::int64_t{1} << 32));
  CHECK(ClusteringCost(Graph::Build(n, {}), Clustering::OneCluster(n)) ==
        expected);
}

TEST_CASE("refinement examples and properties") {
  const std::int64_t single[] = {0, 1, 2};
  const std::int64_t one[] = {0, 0, 0};
  CHECK(IsRefinement(Clustering::FromLabels(single),
                     Clustering::FromLabels(one)));
  const std::int64_t fine[] = {0, 0, 1};
  const std::int64_t coarse[] = {0, 1, 1};
  CHECK_FALSE(IsRefinement(Clustering::FromLabels(fine),
                           Clustering::FromLabels(coarse)));

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng = MakeRng(seed, 2);
    const VertexId n = 1 + static_cast<VertexId>(UniformBelow(rng, 20));
    // a refines b refines c by merging labels.
    std::vector<std::int64_t> a(n), b(n), c(n);
    for (VertexId v = 0; v < n; ++v) {
      a[v] = static_cast<std::int64_t>(UniformBelow(rng, 8));
      b[v] = a[v] / 2;
      c[v] = b[v] / 2;
    }
    const Clustering ca = Clustering::FromLabels(a);
    const Clustering cb = Clustering::FromLabels(b);
    const Clustering cc = Clustering::FromLabels(c);
    CHECK(IsRefinement(ca, ca));
    CHECK(IsRefinement(ca, cb));
    CHECK(IsRefinement(cb, cc));
    CHECK(IsRefinement(ca, cc));
    CHECK(IsRefinement(cc, cb) == SamePartition(cb, cc));
  }
}

TEST_CASE("clustering ids must be dense") {
  CHECK_THROWS_AS(Clustering::FromIds({0, 2}), std::invalid_argument);
  const Clustering c = Clustering::FromIds({1, 0, 1});
  CHECK(c.num_clusters() == 2);
  CHECK(c.Canonical().ids()[0] == 0);
}

TEST_CASE("random permutation basics") {
  const RankAssignment one = RandomPermutation(1, 9);
  CHECK(one.Key(0) == 0);
  CHECK(one.is_permutation());
  const RankAssignment a = RandomPermutation(5, 42);
  const RankAssignment b = RandomPermutation(5, 42);
  for (VertexId v = 0; v < 5; ++v) CHECK(a.raw(v) == b.raw(v));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const RankAssignment p = RandomPermutation(30, seed);
    std::vector<int> seen(30, 0);
    for (VertexId v = 0; v < 30; ++v) ++seen[static_cast<int>(p.raw(v))];
    for (int s : seen) REQUIRE(s == 1);
  }
}

TEST_CASE("random permutation is uniform over S_4") {
  constexpr int kDraws = 100'000;
  std::map<std::vector<int>, int> counts;
  Rng rng = MakeRng(2026);
  for (int i = 0; i < kDraws; ++i) {
    const RankAssignment p = RandomPermutation(4, rng);
    std::vector<int> key(4);
    for (VertexId v = 0; v < 4; ++v) key[v] = static_cast<int>(p.raw(v));
    ++counts[key];
  }
  CHECK(counts.size() == 24);
  const double p = 1.0 / 24;
  const double sd = std::sqrt(kDraws * p * (1 - p));
  for (const auto& [perm, count] : counts) {
    CHECK(std::abs(count - kDraws * p) <= 5 * sd);
  }
}

TEST_CASE("integer ranks") {
  const RankAssignment one = RandomIntegerRanks(1, 3, 5);
  CHECK(one.raw(0) == 0);
  CHECK(one.range() == 1);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const RankAssignment two = RandomIntegerRanks(2, 1, seed);
    CHECK(two.raw(0) <= 1);
    CHECK(two.raw(1) <= 1);
    // A strict order even on a tie, with the smaller ID first.
    CHECK(two.Less(0, 1) != two.Less(1, 0));
    if (two.raw(0) == two.raw(1)) CHECK(two.Less(0, 1));
  }
  CHECK_THROWS_AS(RandomIntegerRanks(1 << 30, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(RandomIntegerRanks(4, 0, 1), std::invalid_argument);
}

TEST_CASE("integer rank collision rate matches the birthday probability") {
  constexpr int kTrials = 10'000;
  constexpr int kN = 100;
  const double range = 1e6;
  double no_collision = 1.0;
  for (int i = 1; i < kN; ++i) no_collision *= 1.0 - i / range;
  const double p = 1.0 - no_collision;
  int hits = 0;
  for (int t = 0; t < kTrials; ++t) {
    const RankAssignment ranks =
        RandomIntegerRanks(kN, 3, MakeRng(77, t)());
    std::vector<uint128> raw;
    for (VertexId v = 0; v < kN; ++v) raw.push_back(ranks.raw(v));
    std::sort(raw.begin(), raw.end());
    hits += std::adjacent_find(raw.begin(), raw.end()) != raw.end();
  }
  const double sd = std::sqrt(kTrials * p * (1 - p));
  CHECK(std::abs(hits - kTrials * p) <= 5 * sd);
}

TEST_CASE("rank order is (rank, id) lexicographic") {
  const RankAssignment r = RankAssignment::FromIntegerRanks({5, 3, 5, 0}, 2);
  const auto pos = ref::Positions(r);
  for (VertexId a = 0; a < 4; ++a) {
    for (VertexId b = 0; b < 4; ++b) {
      if (a != b) CHECK(r.Less(a, b) == (pos[a] < pos[b]));
    }
  }
  CHECK(r.order()[0] == 3);
  CHECK(r.order()[1] == 1);
  CHECK(r.order()[2] == 0);
  CHECK(r.order()[3] == 2);
  CHECK_THROWS_AS(RankAssignment::FromIntegerRanks({16, 0, 0, 0}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(RankAssignment::FromPermutation({0, 0, 1}),
                  std::invalid_argument);
}

TEST_CASE("graph text round trip") {
  const Graph g = ErdosRenyi(15, 0.3, 4);
  std::stringstream s;
  WriteGraphText(s, g);
  const LabeledGraph back = ReadGraphText(s);
  CHECK(back.graph == g);
  CHECK(back.identity_labels);

  std::stringstream lines;
  WriteGraphText(lines, P3());
  CHECK(lines.str() == "3 2\n0 1\n1 2\n");
}

TEST_CASE("graph text parsing") {
  std::istringstream commented("# header\n3 2 # n m\n0 1\n# skip\n2 1\n");
  CHECK(ReadGraphText(commented).graph == P3());

  std::istringstream labeled("3 2\nalice bob\nbob carol\n");
  const LabeledGraph lg = ReadGraphText(labeled);
  CHECK_FALSE(lg.identity_labels);
  CHECK(lg.labels == std::vector<std::string>{"alice", "bob", "carol"});
  CHECK(lg.graph == P3());

  std::istringstream short_body("3 2\n0 1\n");
  CHECK_THROWS_WITH_AS(ReadGraphText(short_body),
                       doctest::Contains("line"), std::runtime_error);
  std::istringstream loop("2 1\n1 1\n");
  CHECK_THROWS(ReadGraphText(loop));
  std::istringstream bad_header("x 1\n0 1\n");
  CHECK_THROWS_AS(ReadGraphText(bad_header), std::runtime_error);
  std::istringstream too_many("2 2\na b\nc d\n");
  CHECK_THROWS_AS(ReadGraphText(too_many), std::runtime_error);
}

}  // namespace
}  // namespace rpivot
