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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "reference.h"
#include "rpivot/exact.h"
#include "rpivot/generators.h"
#include "rpivot/graph_io.h"

namespace rpivot {
namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome Run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = cli::Main(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path TempPath(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("rpivot_cli_" + name);
}

TEST_CASE("rounds for epsilon") {
  CHECK(cli::RoundsForEpsilon(8) == 1);
  CHECK(cli::RoundsForEpsilon(8.0 / 3) == 2);
  CHECK(cli::RoundsForEpsilon(1) == 5);
  for (double eps : {0.05, 0.3, 0.7, 1.5, 2.0, 3.0, 7.9, 100.0}) {
    const int r = cli::RoundsForEpsilon(eps);
    CHECK(8.0 / (2 * r - 1) <= eps);
    if (r > 1) CHECK(8.0 / (2 * (r - 1) - 1) > eps);
  }
  CHECK_THROWS_AS(cli::RoundsForEpsilon(0), std::invalid_argument);
  CHECK_THROWS_AS(cli::RoundsForEpsilon(-1), std::invalid_argument);
}

TEST_CASE("trial and generator parsing") {
  CHECK(cli::ParseTrials("exhaustive") == std::nullopt);
  CHECK(cli::ParseTrials("250") == 250);
  CHECK(cli::ParseTrials("1e4") == 10000);
  CHECK_THROWS(cli::ParseTrials("0"));
  CHECK_THROWS(cli::ParseTrials("abc"));
  CHECK_THROWS(cli::ParseTrials("2.5"));

  CHECK(cli::Generate("petersen", 1).graph == PetersenGraph());
  CHECK(cli::Generate("er:12,0.5,12", 99).graph == ErdosRenyi(12, 0.5, 12));
  CHECK(cli::Generate("er:12,0.5", 12).graph == ErdosRenyi(12, 0.5, 12));
  const cli::GeneratedGraph cp = cli::Generate("clique-path:8,3", 1);
  CHECK(cp.graph.n() == 14);
  REQUIRE(cp.adversarial_order.has_value());
  CHECK_THROWS_AS(cli::Generate("nope:3", 1), std::invalid_argument);
  CHECK_THROWS_AS(cli::Generate("er:5", 1), std::invalid_argument);
  CHECK_THROWS_AS(cli::Generate("path:x", 1), std::invalid_argument);
}

TEST_CASE("exhaustive run matches the reference mean") {
  const Outcome o = Run({"run", "--gen", "path:5", "--algo", "pivot",
                         "--trials", "exhaustive"});
  REQUIRE(o.code == 0);
  const Graph g = PathGraph(5);
  double total = 0;
  ForEachPermutation(5, [&](const RankAssignment& pi) {
    total += static_cast<double>(ref::Cost(g, ref::SequentialPivot(g, pi).label));
  });
  const Json j = o.json();
  CHECK(j.at("schema_version") == 1);
  CHECK(j.at("command") == "run");
  CHECK(j.at("result").at("trials") == 120);
  CHECK(j.at("result").at("mean_cost").get<double>() ==
        doctest::Approx(total / 120));
}

TEST_CASE("file runs are reproducible") {
  const auto graph = TempPath("graph.txt");
  WriteGraphFile(graph.string(), ErdosRenyi(25, 0.3, 5));
  const auto a = TempPath("a.json"), b = TempPath("b.json");
  for (const auto& out : {a, b}) {
    REQUIRE(Run({"--seed", "7", "--out", out.string(), "run", "--file",
                 graph.string(), "--r", "3"})
                .code == 0);
  }
  CHECK(!ReadFile(a).empty());
  CHECK(ReadFile(a) == ReadFile(b));
  const Outcome stream = Run({"--seed", "7", "run", "--file", graph.string(),
                              "--r", "3", "--algo", "streaming"});
  REQUIRE(stream.code == 0);
  CHECK(stream.json().at("result").at("cost") ==
        Json::parse(ReadFile(a)).at("result").at("cost"));
  for (const auto& p : {graph, a, b}) std::filesystem::remove(p);
}

TEST_CASE("run options") {
  const Outcome o = Run({"run", "--gen", "cliques:3,3", "--algo",
                         "rpivot-variant"});
  REQUIRE(o.code == 0);
  CHECK(o.json().at("result").at("cost") == 0);
  const Outcome eps = Run({"run", "--gen", "petersen", "--epsilon", "1"});
  REQUIRE(eps.code == 0);
  CHECK(eps.json().at("config").at("r") == 5);
  const Outcome both =
      Run({"run", "--gen", "petersen", "--epsilon", "1", "--r", "2"});
  CHECK(both.code != 0);
  const Outcome unknown = Run({"run", "--gen", "nope:1"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("error") != std::string::npos);
}

TEST_CASE("ratio command") {
  const Outcome zero = Run({"ratio", "--gen", "cliques:3,3", "--trials", "50"});
  REQUIRE(zero.code == 0);
  const Json z = zero.json().at("result");
  CHECK(z.at("opt") == 0);
  CHECK(z.at("opt_zero") == true);
  CHECK(z.at("rpivot_ratio").is_null());

  const Outcome c5 = Run({"ratio", "--gen", "cycle:5", "--trials",
                          "exhaustive"});
  REQUIRE(c5.code == 0);
  const Json c = c5.json().at("result");
  CHECK(c.at("opt") == 3);
  CHECK(c.at("rpivot_cost").at("mean").get<double>() ==
        doctest::Approx(10.0 / 3));
  CHECK(c.at("rpivot_ratio").at("mean").get<double>() <= 11.0);
  CHECK(c.at("cost_within_bound") == true);

  const Outcome big = Run({"ratio", "--gen", "er:20,0.3,1", "--trials", "10"});
  CHECK(big.code == 2);
  CHECK(big.err.find("--opt") != std::string::npos);
}

TEST_CASE("width command on cliques is all zero") {
  const Outcome o = Run({"width", "--gen", "cliques:3,3", "--trials", "50"});
  REQUIRE(o.code == 0);
  std::istringstream lines(o.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 'a') continue;
    ++rows;
    std::istringstream cells(line);
    std::string cell;
    int col = 0;
    while (std::getline(cells, cell, ',')) {
      if (col == 3 || col == 6 || col == 8 || col == 10) CHECK(cell == "0");
      ++col;
    }
  }
  CHECK(rows == 15);
}

TEST_CASE("verify command exit status") {
  const Outcome ok = Run({"--trials", "30", "verify", "executors"});
  CHECK(ok.code == 0);
  const Outcome bad = Run({"--trials", "50", "verify", "executors",
                           "--corrupt-tie-break"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("seed") != std::string::npos);
}

TEST_CASE("clique path command") {
  const Outcome o = Run({"adversarial", "appendixB"});
  REQUIRE(o.code == 0);
  const Json pts = o.json().at("result").at("points");
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].at("N") == 8);
  CHECK(pts[0].at("rpivot_cost") == 31);
  CHECK(pts[0].at("witness_cost") == 6);
  CHECK(pts[1].at("rpivot_cost") == 783);
  CHECK(pts[1].at("ratio").get<double>() == doctest::Approx(130.5));
}

TEST_CASE("gen writes the graph and a sidecar") {
  const auto path = TempPath("gen.txt");
  REQUIRE(Run({"--out", path.string(), "gen", "--gen", "petersen"}).code == 0);
  CHECK(ReadGraphFile(path.string()).graph == PetersenGraph());
  const Json side = Json::parse(ReadFile(path.string() + ".json"));
  CHECK(side.at("command") == "gen");
  const Outcome o = Run({"gen", "--gen", "path:3"});
  std::istringstream in(o.out);
  CHECK(ReadGraphText(in).graph == PathGraph(3));
  std::filesystem::remove(path);
  std::filesystem::remove(path.string() + ".json");
}

TEST_CASE("thread count does not change results") {
  const Outcome a = Run({"--trials", "300", "--threads", "1", "ratio",
                         "--gen", "petersen"});
  const Outcome b = Run({"--trials", "300", "--threads", "3", "ratio",
                         "--gen", "petersen"});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  CHECK(a.json().at("result") == b.json().at("result"));
}

}  // namespace
}  // namespace rpivot
