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
#include <sstream>

#include "doctest.h"
#include "reference.h"
#include "rpivot/exact.h"
#include "rpivot/generators.h"
#include "rpivot/json_io.h"
#include "rpivot/oracle.h"
#include "rpivot/pivot.h"
#include "rpivot/random.h"
#include "rpivot/verify.h"

namespace rpivot {
namespace {

// The path ordering rule, computed from adjacency alone.
std::vector<VertexId> ExpectedPath(const Graph& g, const RankAssignment& pi,
                                   VertexId u, VertexId v,
                                   const std::vector<VertexId>& stack) {
  const VertexId w1 = stack.front();
  const bool by_u = ref::Adjacent(g, u, w1);
  const bool by_v = ref::Adjacent(g, v, w1);
  VertexId first = u, second = v;
  if (by_u && !by_v) {
    first = v;
    second = u;
  } else if (by_u && by_v && pi.Less(u, v)) {
    first = v;
    second = u;
  }
  std::vector<VertexId> path{first, second};
  path.insert(path.end(), stack.begin(), stack.end());
  return path;
}

TEST_CASE("vertex oracle on a star") {
  const Graph star = StarGraph(4);
  const RankAssignment pi = RankAssignment::Identity(5);
  const QueryTrace center = TraceVertex(star, pi, 0);
  CHECK(center.result);
  CHECK(center.direct_query_count == 0);
  const QueryTrace leaf = TraceVertex(star, pi, 3);
  CHECK_FALSE(leaf.result);
  CHECK(leaf.root_queries == std::vector<VertexId>{0});
  CHECK(leaf.max_stack == 1);
}

TEST_CASE("pair oracle base cases") {
  // Vertex 0 has global rank 0.
  const Graph g = PathGraph(4);
  const QueryTrace t = TracePair(g, RankAssignment::Identity(4), 0, 1);
  CHECK(t.result);
  CHECK(t.direct_query_count == 0);
  // Empty merged candidate list.
  const Graph p3 = PathGraph(3);
  const RankAssignment pi = RankAssignment::FromPermutation({2, 0, 1});
  const QueryTrace e = TracePair(p3, pi, 1, 2);
  CHECK(e.result);
  CHECK(e.root_queries.empty());
}

TEST_CASE("vertex oracle equals pivot membership") {
  for (std::int64_t t = 0; t < 200; ++t) {
    const RandomInstance inst = MakeRandomInstance(21, t, 1, 40);
    QueryContext ctx(inst.graph, inst.pi);
    const ref::Run piv = ref::SequentialPivot(inst.graph, inst.pi);
    ref::Oracle oracle(inst.graph, inst.pi);
    for (VertexId v = 0; v < inst.graph.n(); ++v) {
      const bool want = piv.pivots.count(v) > 0;
      REQUIRE(ctx.IsPivot(v) == want);
      REQUIRE(oracle.Vertex(v) == want);
      const QueryTrace tr = TraceVertex(ctx, v);
      REQUIRE(tr.result == want);
      oracle.queried_by_root.clear();
      oracle.Vertex(v);
      REQUIRE(tr.root_queries == oracle.queried_by_root);
      REQUIRE(ctx.DirectQueries(v) == oracle.queried_by_root);
    }
  }
}

TEST_CASE("pair oracle on X-pairs of the 5-path") {
  const Graph g = PathGraph(5);
  std::int64_t pairs = 0;
  for (int r = 1; r <= 2; ++r) {
    ForEachPermutation(5, [&](const RankAssignment& pi) {
      const ExtraMistakes x = ComputeExtraMistakes(g, pi, r);
      QueryContext ctx(g, pi);
      for (const ExtraMistake& m : x.pairs) {
        ++pairs;
        const bool want = m.common_pivot == m.u || m.common_pivot == m.v;
        REQUIRE(TracePair(ctx, m.u, m.v).result == want);
        REQUIRE(ctx.PairValue(m.u, m.v) == want);
        ref::Oracle oracle(g, pi);
        REQUIRE(oracle.Pair(m.u, m.v) == want);
      }
    });
  }
  CHECK(pairs > 0);
}

TEST_CASE("direct query characterization") {
  for (std::int64_t t = 0; t < 300; ++t) {
    const RandomInstance inst = MakeRandomInstance(22, t, 2, 30);
    const Graph& g = inst.graph;
    QueryContext ctx(g, inst.pi);
    const ref::Run piv = ref::SequentialPivot(g, inst.pi);
    const auto pos = ref::Positions(inst.pi);
    for (VertexId v = 0; v < g.n(); ++v) {
      const std::vector<VertexId> q = ctx.DirectQueries(v);
      REQUIRE(CheckDirectQueries(ctx, v, q) == "");
      if (piv.pivots.count(v)) {
        for (VertexId z : q) REQUIRE(!piv.pivots.count(z));
      } else {
        const VertexId p = piv.label[v];
        std::vector<VertexId> want;
        for (VertexId z : g.Neighbors(v)) {
          if (pos[z] <= pos[p]) want.push_back(z);
        }
        std::vector<VertexId> got = q;
        std::sort(got.begin(), got.end());
        REQUIRE(got == want);
        int pivots_seen = 0;
        for (VertexId z : q) pivots_seen += piv.pivots.count(z) > 0;
        REQUIRE(pivots_seen == 1);
      }
    }
    const ExtraMistakes x = ComputeExtraMistakes(g, inst.pi, inst.r);
    for (const ExtraMistake& m : x.pairs) {
      const std::vector<VertexId> q = ctx.DirectQueriesPair(m.u, m.v);
      REQUIRE(CheckDirectQueriesPair(ctx, m.u, m.v, q) == "");
      const VertexId p = m.common_pivot;
      if (p != m.u && p != m.v) {
        std::set<VertexId> want;
        for (VertexId a : {m.u, m.v}) {
          for (VertexId z : g.Neighbors(a)) {
            if (pos[z] <= pos[p]) want.insert(z);
          }
        }
        REQUIRE(std::set<VertexId>(q.begin(), q.end()) == want);
      }
    }
  }
}

TEST_CASE("stack paths on the 6-path match the recursive simulator") {
  const Graph g = PathGraph(6);
  std::int64_t paths = 0;
  ForEachPermutation(6, [&](const RankAssignment& pi) {
    const ExtraMistakes x = ComputeExtraMistakes(g, pi, 1);
    QueryContext ctx(g, pi);
    for (const ExtraMistake& m : x.pairs) {
      ref::Oracle oracle(g, pi);
      const std::vector<VertexId> stack = oracle.FirstStack(m.u, m.v, 2);
      REQUIRE(stack.size() == 2);
      const StackPath path = BuildStackPath(ctx, m.u, m.v, 2);
      REQUIRE(path.vertices == ExpectedPath(g, pi, m.u, m.v, stack));
      const ChargeRecord c = ChargeFromPath(g, path);
      REQUIRE(IsBadTriangle(g, c.triangle.a, c.triangle.b, c.triangle.c));
      ++paths;
    }
  });
  CHECK(paths > 0);
}

TEST_CASE("stack paths on random graphs") {
  for (std::int64_t t = 0; t < 300; ++t) {
    const RandomInstance inst = MakeRandomInstance(23, t, 4, 24);
    const Graph& g = inst.graph;
    const ExtraMistakes x = ComputeExtraMistakes(g, inst.pi, inst.r);
    QueryContext ctx(g, inst.pi);
    for (const ExtraMistake& m : x.pairs) {
      const int max_ell = 2 * inst.r;
      const std::vector<StackPath> paths =
          BuildStackPaths(ctx, m.u, m.v, max_ell);
      REQUIRE(paths.size() == static_cast<std::size_t>(max_ell - 1));
      for (const StackPath& p : paths) {
        ref::Oracle oracle(g, inst.pi);
        const auto stack = oracle.FirstStack(m.u, m.v, p.ell);
        REQUIRE(stack.size() == static_cast<std::size_t>(p.ell));
        REQUIRE(p.vertices == ExpectedPath(g, inst.pi, m.u, m.v, stack));
        for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
          REQUIRE(ref::Adjacent(g, p.vertices[i], p.vertices[i + 1]));
          if (i >= 1) REQUIRE(inst.pi.Less(p.vertices[i + 1], p.vertices[i]));
        }
        const ChargeRecord c = ChargeFromPath(g, p);
        const auto& v = p.vertices;
        REQUIRE(c.triangle.a == v[v.size() - 3]);
        REQUIRE(c.triangle.b == v[v.size() - 2]);
        REQUIRE(c.triangle.c == v[v.size() - 1]);
        REQUIRE(IsBadTriangle(g, c.triangle.a, c.triangle.b, c.triangle.c));
      }
    }
  }
}

TEST_CASE("shorter stack limits truncate the same trace") {
  for (std::int64_t t = 0; t < 100; ++t) {
    const RandomInstance inst = MakeRandomInstance(24, t, 6, 24);
    const ExtraMistakes x = ComputeExtraMistakes(inst.graph, inst.pi, 3);
    QueryContext ctx(inst.graph, inst.pi);
    for (const ExtraMistake& m : x.pairs) {
      TraceOptions opts;
      opts.record_events = true;
      opts.stack_limit = 6;
      const QueryTrace full = TracePair(ctx, m.u, m.v, opts);
      for (int ell = 2; ell < 6; ++ell) {
        opts.stack_limit = ell;
        const QueryTrace part = TracePair(ctx, m.u, m.v, opts);
        REQUIRE(part.truncated_at == ell);
        REQUIRE(part.events.size() <= full.events.size());
        REQUIRE(std::equal(part.events.begin(), part.events.end(),
                           full.events.begin()));
        REQUIRE(part.first_stack.back() == full.first_stack[ell - 1]);
      }
    }
  }
}

TEST_CASE("trace events are literal pushes and pops") {
  for (std::int64_t t = 0; t < 100; ++t) {
    const RandomInstance inst = MakeRandomInstance(25, t, 2, 20);
    const Graph& g = inst.graph;
    QueryContext ctx(g, inst.pi);
    TraceOptions opts;
    opts.record_events = true;
    const VertexId root = static_cast<VertexId>(t % g.n());
    const QueryTrace tr = TraceVertex(ctx, root, opts);
    const auto snaps = tr.Snapshots();
    REQUIRE(snaps.size() == tr.events.size());
    std::vector<VertexId> prev;
    for (const auto& s : snaps) {
      const bool push = s.size() == prev.size() + 1 &&
                        std::equal(prev.begin(), prev.end(), s.begin());
      const bool pop = s.size() + 1 == prev.size() &&
                       std::equal(s.begin(), s.end(), prev.begin());
      REQUIRE((push || pop));
      if (push) {
        const VertexId below = s.size() == 1 ? root : s[s.size() - 2];
        REQUIRE(ref::Adjacent(g, below, s.back()));
        REQUIRE(inst.pi.Less(s.back(), below));
      }
      prev = s;
    }
    REQUIRE(prev.empty());
    REQUIRE(tr.result == ctx.IsPivot(root));
    const Json j = ToJson(tr);
    if (tr.events.empty()) {
      REQUIRE_FALSE(j.contains("events"));
    } else {
      REQUIRE(j.at("events").size() == tr.events.size());
    }
  }
}

TEST_CASE("unsettled vertices have deep traces") {
  for (std::int64_t t = 0; t < 300; ++t) {
    const RandomInstance inst = MakeRandomInstance(26, t, 2, 40);
    QueryContext ctx(inst.graph, inst.pi);
    for (int rounds = 1; rounds <= 3; ++rounds) {
      const ref::Run run = ref::RPivot(inst.graph, inst.pi, rounds);
      for (VertexId v = 0; v < inst.graph.n(); ++v) {
        if (run.settled[v]) continue;
        TraceOptions opts;
        opts.stack_limit = 2 * rounds;
        REQUIRE(TraceVertex(ctx, v, opts).max_stack == 2 * rounds);
      }
    }
  }
}

TEST_CASE("query budget") {
  // Vertex(19) on the identity-ranked path recurses down the whole path.
  const Graph g = PathGraph(20);
  const RankAssignment pi = RankAssignment::Identity(20);
  TraceOptions opts;
  CHECK(TraceVertex(g, pi, 19, opts).direct_query_count == 19);
  opts.query_budget = 5;
  CHECK_THROWS_AS(TraceVertex(g, pi, 19, opts), QueryBudgetExceeded);
  CHECK_THROWS_WITH(TraceVertex(g, pi, 19, opts), doctest::Contains("5"));
}

TEST_CASE("charging rounds") {
  const VertexId sizes[] = {3, 4};
  const Graph cliques = DisjointCliques(sizes);
  Rng rng = MakeRng(3);
  const ChargingRoundResult none =
      ChargingRound(cliques, RandomPermutation(7, rng), 2, rng);
  CHECK(none.charges.empty());

  const Graph g = PetersenGraph();
  for (int i = 0; i < 20; ++i) {
    CHECK(ChargingRound(g, RandomPermutation(10, rng), 1, rng).ell == 2);
  }
}

TEST_CASE("sampled ell is uniform over [2, 2r]") {
  constexpr int kRounds = 10'000;
  constexpr int kR = 3;
  const Graph g = CycleGraph(7);
  std::vector<int> hist(2 * kR - 1, 0);
  Rng rng = MakeRng(99);
  for (int i = 0; i < kRounds; ++i) {
    const ChargingRoundResult res =
        ChargingRound(g, RandomPermutation(7, rng), kR, rng);
    REQUIRE(res.ell >= 2);
    REQUIRE(res.ell <= 2 * kR);
    for (const ChargeRecord& c : res.charges) REQUIRE(c.ell == res.ell);
    ++hist[res.ell - 2];
  }
  const double p = 1.0 / (2 * kR - 1);
  const double sd = std::sqrt(kRounds * p * (1 - p));
  for (int h : hist) CHECK(std::abs(h - kRounds * p) <= 5 * sd);
}

TEST_CASE("width study on cliques is all zero") {
  const VertexId sizes[] = {3, 3, 2};
  const WidthStudyResult w = WidthStudy(DisjointCliques(sizes), 2, 500, 1);
  CHECK(w.pairs.size() == 28);
  for (const PairWidth& p : w.pairs) {
    CHECK(p.mean_charges == 0);
    CHECK(p.mean_r_ab == 0);
    CHECK(p.mean_r_ba == 0);
  }
  CHECK(w.mistakes.mean() == 0);
  std::istringstream csv(WidthStudyCsv(w));
  std::string header;
  std::getline(csv, header);
  CHECK(header.rfind("a,b,is_edge,mean_charges,stderr,trials", 0) == 0);
}

TEST_CASE("width study charges match direct charging") {
  // Trial t of the study uses MakeRng(seed, t) for the permutation and then
  // for ell, so replaying charging rounds reproduces its charge totals.
  const Graph g = ErdosRenyi(9, 0.5, 4);
  constexpr int kTrials = 300;
  const WidthStudyResult w = WidthStudy(g, 2, kTrials, 17);
  std::map<std::pair<VertexId, VertexId>, int> charges;
  for (int t = 0; t < kTrials; ++t) {
    Rng rng = MakeRng(17, t);
    const RankAssignment pi = RandomPermutation(g.n(), rng);
    for (const ChargeRecord& c : ChargingRound(g, pi, 2, rng).charges) {
      const VertexId tri[] = {c.triangle.a, c.triangle.b, c.triangle.c};
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
          ++charges[{std::min(tri[i], tri[j]), std::max(tri[i], tri[j])}];
        }
      }
    }
  }
  for (const PairWidth& p : w.pairs) {
    const int want = charges[{p.a, p.b}];
    CHECK(p.mean_charges * kTrials == doctest::Approx(want));
  }
}

}  // namespace
}  // namespace rpivot
