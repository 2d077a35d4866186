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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "rpivot/clustering.h"
#include "rpivot/exact.h"
#include "rpivot/executors.h"
#include "rpivot/experiments.h"
#include "rpivot/generators.h"
#include "rpivot/graph_io.h"
#include "rpivot/oracle.h"
#include "rpivot/parallel.h"
#include "rpivot/pivot.h"
#include "rpivot/random.h"
#include "rpivot/verify.h"

namespace rpivot::cli {
namespace {

constexpr char kGeneratorHelp[] =
    "generator specs: path:n | cycle:n | complete:n | star:leaves | "
    "cliques:a,b,... | er:n,p[,seed] | petersen | clique-path:N,r | "
    "layered:r,N (line graph of the layered host)";

const std::vector<std::string> kAlgorithms = {
    "pivot", "parallel-pivot", "rpivot", "rpivot-variant",
    "streaming", "local", "mpc", "lca"};

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

std::int64_t ParseInt(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw std::invalid_argument(what + ": expected an integer, got '" + text +
                                "'");
  }
  return value;
}

double ParseDouble(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw std::invalid_argument(what + ": expected a number, got '" + text +
                                "'");
  }
  return value;
}

VertexId ParseCount(const std::string& text, const std::string& what) {
  const std::int64_t v = ParseInt(text, what);
  if (v < 0 || v > std::numeric_limits<VertexId>::max()) {
    throw std::invalid_argument(what + " out of range: " + text);
  }
  return static_cast<VertexId>(v);
}

void ExpectArity(const std::string& name, const std::vector<std::string>& a,
                 std::size_t lo, std::size_t hi, const std::string& form) {
  if (a.size() < lo || a.size() > hi) {
    throw std::invalid_argument("generator '" + name + "' expects " + form);
  }
}

}  // namespace

int RoundsForEpsilon(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("--epsilon must be a positive number");
  }
  const double r = std::ceil((8.0 / epsilon + 1.0) / 2.0);
  if (r > 1e6) throw std::invalid_argument("--epsilon too small");
  int rounds = std::max(1, static_cast<int>(r));
  while (8.0 / (2 * rounds - 1) > epsilon) ++rounds;
  return rounds;
}

std::optional<std::int64_t> ParseTrials(const std::string& text) {
  if (text == "exhaustive") return std::nullopt;
  const double v = ParseDouble(text, "--trials");
  if (!(v >= 1) || v != std::floor(v) || v > 1e12) {
    throw std::invalid_argument(
        "--trials must be a positive integer or 'exhaustive'");
  }
  return static_cast<std::int64_t>(v);
}

GeneratedGraph Generate(const std::string& spec, std::uint64_t seed) {
  const std::size_t colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::vector<std::string> a =
      colon == std::string::npos ? std::vector<std::string>{}
                                 : SplitList(spec.substr(colon + 1));
  GeneratedGraph out;
  out.meta = Json{{"generator", name}, {"spec", spec}};
  if (name == "path" || name == "cycle" || name == "complete" ||
      name == "star") {
    ExpectArity(name, a, 1, 1, name + ":n");
    const VertexId n = ParseCount(a[0], name);
    out.graph = name == "path"       ? PathGraph(n)
                : name == "cycle"    ? CycleGraph(n)
                : name == "complete" ? CompleteGraph(n)
                                     : StarGraph(n);
    out.meta["n_param"] = n;
  } else if (name == "cliques") {
    if (a.empty()) {
      throw std::invalid_argument("generator 'cliques' expects cliques:a,b,...");
    }
    std::vector<VertexId> sizes;
    for (const std::string& s : a) sizes.push_back(ParseCount(s, "clique size"));
    out.graph = DisjointCliques(sizes);
    out.meta["sizes"] = sizes;
  } else if (name == "er") {
    ExpectArity(name, a, 2, 3, "er:n,p[,seed]");
    const VertexId n = ParseCount(a[0], "er n");
    const double p = ParseDouble(a[1], "er p");
    const std::uint64_t s =
        a.size() == 3 ? static_cast<std::uint64_t>(ParseInt(a[2], "er seed"))
                      : seed;
    out.graph = ErdosRenyi(n, p, s);
    out.meta["n_param"] = n;
    out.meta["p"] = p;
    out.meta["seed"] = s;
  } else if (name == "petersen") {
    ExpectArity(name, a, 0, 0, "no parameters");
    out.graph = PetersenGraph();
  } else if (name == "clique-path") {
    ExpectArity(name, a, 2, 2, "clique-path:N,r");
    AdversarialInstance inst = CliquePlusPath(
        ParseCount(a[0], "clique size"),
        static_cast<int>(ParseInt(a[1], "clique-path r")));
    out.graph = std::move(inst.graph);
    out.adversarial_order = std::move(inst.pi);
    out.meta["metadata"] = ToJson(inst.metadata);
  } else if (name == "layered") {
    ExpectArity(name, a, 2, 2, "layered:r,N");
    LayeredLineGraph lg =
        BuildLayeredLineGraph(static_cast<int>(ParseInt(a[0], "layered r")),
                              ParseInt(a[1], "layered N"));
    out.graph = std::move(lg.line.graph);
    out.meta["params"] = ToJson(lg.layered.params);
  } else {
    throw std::invalid_argument("unknown generator '" + name + "'; " +
                                kGeneratorHelp);
  }
  out.meta["n"] = out.graph.n();
  out.meta["m"] = out.graph.m();
  return out;
}

namespace {

struct Options {
  std::uint64_t seed = 1;
  std::string trials;
  int threads = 1;
  std::string out;
  std::string format = "json";
  bool format_given = false;

  std::string gen;
  std::string file;
  std::string algo = "rpivot";
  int r = 1;
  bool r_given = false;
  double epsilon = 0.0;
  bool epsilon_given = false;
  int exponent = 3;
  bool exponent_given = false;
  double delta = 0.5;
  bool adversarial_order = false;

  std::int64_t opt = -1;

  std::string kind;
  std::string sweep;
  std::int64_t budget = kDefaultEdgeBudget;

  std::string suite = "all";
  VertexId exhaustive_n = 6;
  bool corrupt_tie_break = false;
};

struct Source {
  Graph graph;
  Json meta;
  std::optional<RankAssignment> adversarial_order;
  std::string file;  // set when read from a file
};

Source LoadSource(const Options& o) {
  if (o.gen.empty() == o.file.empty()) {
    throw std::invalid_argument("give exactly one of --gen or --file");
  }
  Source s;
  if (!o.gen.empty()) {
    GeneratedGraph g = Generate(o.gen, o.seed);
    s.graph = std::move(g.graph);
    s.meta = std::move(g.meta);
    s.adversarial_order = std::move(g.adversarial_order);
  } else {
    LabeledGraph lg = ReadGraphFile(o.file);
    s.graph = std::move(lg.graph);
    s.file = o.file;
    s.meta = Json{{"file", o.file}, {"n", s.graph.n()}, {"m", s.graph.m()}};
    if (!lg.identity_labels) s.meta["labels"] = lg.labels;
  }
  return s;
}

int Rounds(const Options& o) {
  if (o.epsilon_given) return RoundsForEpsilon(o.epsilon);
  if (o.r < 1) throw std::invalid_argument("--r must be >= 1");
  return o.r;
}

Json BaseDoc(const std::string& command, const Options& o, Json config) {
  config["seed"] = o.seed;
  config["threads"] = o.threads;
  return Json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"seed", o.seed},
              {"config", std::move(config)}};
}

// CSV artifacts start with '#' lines carrying the schema version and the
// full config, so they replay like the JSON ones.
std::string CsvHeader(const Json& doc) {
  return "# schema_version=" + std::to_string(kSchemaVersion) +
         "\n# command=" + doc["command"].get<std::string>() +
         "\n# config=" + doc["config"].dump() + "\n";
}

void Emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text;
}

std::string Num(double x) {
  std::ostringstream s;
  s << std::setprecision(10) << x;
  return s.str();
}

bool UsesIntegerRanks(const std::string& algo) {
  return algo == "rpivot-variant" || algo == "local" || algo == "mpc" ||
         algo == "lca";
}

RankAssignment DrawRanks(const std::string& algo, VertexId n, int exponent,
                         Rng& rng) {
  return UsesIntegerRanks(algo) ? RandomIntegerRanks(n, exponent, rng)
                                : RandomPermutation(n, rng);
}

struct SingleRun {
  Clustering clustering;
  std::vector<VertexId> pivots;
  std::vector<char> settled;  // empty for full Pivot
  std::optional<ResourceReport> report;
  std::optional<ExtraMistakes> mistakes;
  int rounds_used = 0;
};

SingleRun Execute(const Options& o, const Source& src, const RankAssignment& pi,
                  int r, bool with_mistakes) {
  const Graph& g = src.graph;
  SingleRun s;
  auto from_executor = [&](ExecutorResult res) {
    s.clustering = std::move(res.clustering);
    for (VertexId v = 0; v < g.n(); ++v) {
      if (res.is_pivot[v]) s.pivots.push_back(v);
    }
    s.settled = std::move(res.settled);
    s.report = std::move(res.report);
  };
  if (o.algo == "pivot" || o.algo == "parallel-pivot") {
    PivotRun run = o.algo == "pivot" ? SequentialPivot(g, pi)
                                     : ParallelPivotFull(g, pi);
    s.clustering = std::move(run.clustering);
    s.pivots = std::move(run.pivots);
    s.rounds_used = run.rounds_used;
  } else if (o.algo == "rpivot" || o.algo == "rpivot-variant") {
    RPivotState st = o.algo == "rpivot" ? RPivot(g, pi, r)
                                        : RPivotVariant(g, pi, r);
    if (with_mistakes && o.algo == "rpivot" && pi.is_permutation()) {
      s.mistakes = ComputeExtraMistakes(g, pi, r);
    }
    s.clustering = std::move(st.clustering);
    s.pivots = std::move(st.pivots);
    s.settled = std::move(st.settled);
  } else if (o.algo == "streaming") {
    if (!src.file.empty() && src.meta.find("labels") == src.meta.end()) {
      FileEdgeStream stream(src.file);
      from_executor(StreamingExecute(stream, g.n(), pi, r));
    } else {
      VectorEdgeStream stream(g.Edges());
      from_executor(StreamingExecute(stream, g.n(), pi, r));
    }
  } else if (o.algo == "local") {
    from_executor(LocalExecute(g, pi, r));
  } else if (o.algo == "mpc") {
    from_executor(MpcExecute(g, pi, r, o.delta));
  } else if (o.algo == "lca") {
    from_executor(LcaExecuteAll(g, pi, r));
  } else {
    throw std::invalid_argument("unknown --algo '" + o.algo + "'");
  }
  return s;
}

Json AlgoConfig(const Options& o, const Source& src, int r) {
  Json c{{"graph", src.meta}, {"algo", o.algo}};
  if (o.algo != "pivot" && o.algo != "parallel-pivot") c["r"] = r;
  if (o.epsilon_given) c["epsilon"] = o.epsilon;
  if (UsesIntegerRanks(o.algo)) c["exponent"] = o.exponent;
  if (o.algo == "mpc") c["delta"] = o.delta;
  if (o.adversarial_order) c["adversarial_order"] = true;
  return c;
}

int CmdRun(const Options& o, std::ostream& out) {
  const Source src = LoadSource(o);
  const Graph& g = src.graph;
  const int r = Rounds(o);
  Json config = AlgoConfig(o, src, r);
  config["trials"] = o.trials.empty() ? "1" : o.trials;

  if (o.trials.empty()) {
    RankAssignment pi;
    if (o.adversarial_order) {
      if (!src.adversarial_order) {
        throw std::invalid_argument(
            "--adversarial-order needs a generator with a built-in order "
            "(clique-path)");
      }
      if (UsesIntegerRanks(o.algo)) {
        throw std::invalid_argument(
            "--adversarial-order is a permutation; pick pivot, "
            "parallel-pivot, rpivot or streaming");
      }
      pi = *src.adversarial_order;
    } else {
      Rng rng = MakeRng(o.seed, 0);
      pi = DrawRanks(o.algo, g.n(), o.exponent, rng);
    }
    const SingleRun s = Execute(o, src, pi, r, true);
    Json doc = BaseDoc("run", o, std::move(config));
    const std::int64_t cost = ClusteringCost(g, s.clustering);
    if (o.format == "csv") {
      std::ostringstream csv;
      csv << CsvHeader(doc) << "# cost=" << cost << "\n";
      csv << "vertex,rank,cluster,pivot,settled\n";
      std::vector<char> is_pivot(static_cast<std::size_t>(g.n()), 0);
      for (VertexId p : s.pivots) is_pivot[p] = 1;
      for (VertexId v = 0; v < g.n(); ++v) {
        csv << v << ',' << ToDecimal(pi.raw(v)) << ',' << s.clustering[v]
            << ',' << int(is_pivot[v]) << ','
            << (s.settled.empty() ? 1 : int(s.settled[v])) << '\n';
      }
      Emit(o, out, csv.str());
      return 0;
    }
    Json ranks = Json::array();
    for (VertexId v = 0; v < g.n(); ++v) {
      if (pi.is_permutation()) {
        ranks.push_back(pi.Key(v));
      } else {
        ranks.push_back(ToDecimal(pi.raw(v)));
      }
    }
    Json result{{"cost", cost}, {"pivots", s.pivots}};
    if (s.rounds_used > 0) result["rounds_used"] = s.rounds_used;
    if (!s.settled.empty()) {
      std::vector<VertexId> unsettled;
      for (VertexId v = 0; v < g.n(); ++v) {
        if (!s.settled[v]) unsettled.push_back(v);
      }
      result["unsettled"] = unsettled;
    }
    result["clusters"] = ToJson(s.clustering);
    if (s.report) result["resources"] = ToJson(*s.report);
    if (s.mistakes) {
      result["pivot_cost"] = ClusteringCost(g, s.mistakes->pivot.clustering);
      result["extra_mistakes"] = ToJson(*s.mistakes);
    }
    doc["ranks"] = std::move(ranks);
    doc["result"] = std::move(result);
    Emit(o, out, doc.dump(2) + "\n");
    return 0;
  }

  const std::optional<std::int64_t> trials = ParseTrials(o.trials);
  std::vector<std::int64_t> costs;
  bool exhaustive = false;
  if (!trials) {
    if (UsesIntegerRanks(o.algo)) {
      throw std::invalid_argument(
          "--trials exhaustive enumerates permutations; '" + o.algo +
          "' uses integer ranks, give a trial count instead");
    }
    exhaustive = true;
    ForEachPermutation(g.n(), [&](const RankAssignment& pi) {
      costs.push_back(ClusteringCost(g, Execute(o, src, pi, r, false).clustering));
    });
  } else {
    costs.resize(static_cast<std::size_t>(*trials));
    ForEachTrial(*trials, o.threads, [&](std::int64_t t) {
      Rng rng = MakeRng(o.seed, static_cast<std::uint64_t>(t));
      const RankAssignment pi = DrawRanks(o.algo, g.n(), o.exponent, rng);
      costs[t] = ClusteringCost(g, Execute(o, src, pi, r, false).clustering);
    });
  }
  RunningStats stats;
  for (std::int64_t c : costs) stats.Add(static_cast<double>(c));
  const double se = exhaustive ? 0.0 : stats.stderr_mean();
  Json doc = BaseDoc("run", o, std::move(config));
  if (o.format == "csv") {
    std::ostringstream csv;
    csv << CsvHeader(doc) << "algo,r,trials,exhaustive,mean_cost,stderr_cost\n"
        << o.algo << ',' << r << ',' << stats.count() << ','
        << (exhaustive ? 1 : 0) << ',' << Num(stats.mean()) << ',' << Num(se)
        << '\n';
    Emit(o, out, csv.str());
    return 0;
  }
  doc["result"] = Json{{"trials", stats.count()},
                       {"exhaustive", exhaustive},
                       {"mean_cost", stats.mean()},
                       {"stderr_cost", se}};
  Emit(o, out, doc.dump(2) + "\n");
  return 0;
}

int CmdRatio(const Options& o, std::ostream& out) {
  const Source src = LoadSource(o);
  const Graph& g = src.graph;
  const int r = Rounds(o);
  const std::string trials_text = o.trials.empty() ? "10000" : o.trials;
  const std::optional<std::int64_t> trials = ParseTrials(trials_text);

  std::int64_t opt = o.opt;
  std::string opt_source = "given";
  if (opt < 0) {
    if (g.n() > kDefaultOptGuard) {
      throw std::invalid_argument(
          "graph has " + std::to_string(g.n()) +
          " vertices; exact opt is limited to n <= " +
          std::to_string(kDefaultOptGuard) + ", pass --opt");
    }
    opt = BruteForceOpt(g).cost;
    opt_source = "brute_force";
  }
  const TrianglePacking packing = GreedyTrianglePacking(g, o.seed);
  if (opt < packing.count) {
    throw std::invalid_argument("--opt " + std::to_string(opt) +
                                " is below the triangle packing lower bound " +
                                std::to_string(packing.count));
  }
  const RatioSample s = SampleRatio(g, r, trials, o.seed, o.threads);
  auto se = [&](const RunningStats& st) {
    return s.exhaustive ? 0.0 : st.stderr_mean();
  };
  const double x_bound = 8.0 / (2 * r - 1);
  const double cost_bound = 3.0 + x_bound;

  Json config = AlgoConfig(o, src, r);
  config.erase("algo");
  config["trials"] = trials_text;
  if (o.opt >= 0) config["opt"] = o.opt;
  Json doc = BaseDoc("ratio", o, std::move(config));

  const bool opt_zero = opt == 0;
  const double rp = s.rpivot_cost.mean(), xm = s.extra_mistakes.mean();
  const bool cost_ok = rp <= cost_bound * opt + 3 * se(s.rpivot_cost);
  const bool x_ok = xm <= x_bound * opt + 3 * se(s.extra_mistakes);

  if (o.format == "csv") {
    std::ostringstream csv;
    csv << CsvHeader(doc)
        << "r,trials,exhaustive,opt,packing_lower_bound,mean_pivot_cost,"
           "stderr_pivot_cost,mean_rpivot_cost,stderr_rpivot_cost,"
           "mean_extra_mistakes,stderr_extra_mistakes,rpivot_ratio,"
           "stderr_rpivot_ratio,extra_ratio,stderr_extra_ratio,cost_bound,"
           "extra_bound,cost_within_bound,extra_within_bound\n";
    auto ratio = [&](double m) { return opt_zero ? std::string() : Num(m / opt); };
    csv << r << ',' << s.trials << ',' << int(s.exhaustive) << ',' << opt
        << ',' << packing.count << ',' << Num(s.pivot_cost.mean()) << ','
        << Num(se(s.pivot_cost)) << ',' << Num(rp) << ','
        << Num(se(s.rpivot_cost)) << ',' << Num(xm) << ','
        << Num(se(s.extra_mistakes)) << ',' << ratio(rp) << ','
        << ratio(se(s.rpivot_cost)) << ',' << ratio(xm) << ','
        << ratio(se(s.extra_mistakes)) << ',' << Num(cost_bound) << ','
        << Num(x_bound) << ',' << int(cost_ok) << ',' << int(x_ok) << '\n';
    Emit(o, out, csv.str());
    return 0;
  }
  auto stat = [&](const RunningStats& st) {
    return Json{{"mean", st.mean()}, {"stderr", se(st)}, {"trials", s.trials}};
  };
  Json result{{"r", r},
              {"trials", s.trials},
              {"exhaustive", s.exhaustive},
              {"opt", opt},
              {"opt_source", opt_source},
              {"opt_zero", opt_zero},
              {"packing_lower_bound", packing.count},
              {"pivot_cost", stat(s.pivot_cost)},
              {"rpivot_cost", stat(s.rpivot_cost)},
              {"extra_mistakes", stat(s.extra_mistakes)},
              {"bounds", {{"cost_ratio", cost_bound}, {"extra_ratio", x_bound}}},
              {"cost_within_bound", cost_ok},
              {"extra_within_bound", x_ok}};
  if (opt_zero) {
    result["rpivot_ratio"] = nullptr;
    result["extra_ratio"] = nullptr;
  } else {
    result["rpivot_ratio"] = {{"mean", rp / opt},
                              {"stderr", se(s.rpivot_cost) / opt}};
    result["extra_ratio"] = {{"mean", xm / opt},
                             {"stderr", se(s.extra_mistakes) / opt}};
  }
  doc["result"] = std::move(result);
  Emit(o, out, doc.dump(2) + "\n");
  return 0;
}

int CmdWidth(const Options& o, std::ostream& out) {
  const Source src = LoadSource(o);
  const int r = Rounds(o);
  const std::string trials_text = o.trials.empty() ? "10000" : o.trials;
  const std::optional<std::int64_t> trials = ParseTrials(trials_text);
  if (!trials) {
    throw std::invalid_argument("width samples ell per permutation; give a "
                                "trial count");
  }
  const WidthStudyResult w = WidthStudy(src.graph, r, *trials, o.seed);
  Json config = AlgoConfig(o, src, r);
  config.erase("algo");
  config["trials"] = trials_text;
  Json doc = BaseDoc("width", o, std::move(config));
  const std::string format = o.format_given ? o.format : "csv";
  if (format == "csv") {
    Emit(o, out, CsvHeader(doc) + WidthStudyCsv(w));
    return 0;
  }
  Json pairs = Json::array();
  double max_charges = 0, max_r_edge = 0, max_r_non_edge = 0;
  for (const PairWidth& p : w.pairs) {
    max_charges = std::max(max_charges, p.mean_charges);
    const double rr = std::max(p.mean_r_ab, p.mean_r_ba);
    (p.is_edge ? max_r_edge : max_r_non_edge) =
        std::max(p.is_edge ? max_r_edge : max_r_non_edge, rr);
    pairs.push_back({{"a", p.a},
                     {"b", p.b},
                     {"is_edge", p.is_edge},
                     {"mean_charges", p.mean_charges},
                     {"stderr_charges", p.stderr_charges},
                     {"mean_r_ab", p.mean_r_ab},
                     {"stderr_r_ab", p.stderr_r_ab},
                     {"mean_r_ba", p.mean_r_ba},
                     {"stderr_r_ba", p.stderr_r_ba}});
  }
  doc["result"] = Json{{"r", r},
                       {"trials", w.trials},
                       {"width_bound", 8.0 / (2 * r - 1)},
                       {"max_mean_charges", max_charges},
                       {"max_mean_r_edge", max_r_edge},
                       {"max_mean_r_non_edge", max_r_non_edge},
                       {"ell_histogram", w.ell_histogram},
                       {"extra_mistakes", ToJson(w.mistakes)},
                       {"pairs", std::move(pairs)}};
  Emit(o, out, doc.dump(2) + "\n");
  return 0;
}

std::vector<std::int64_t> SweepValues(const std::string& text,
                                      const std::string& fallback) {
  std::vector<std::int64_t> out;
  for (const std::string& s : SplitList(text.empty() ? fallback : text)) {
    out.push_back(ParseInt(s, "--sweep"));
  }
  if (out.empty()) throw std::invalid_argument("--sweep is empty");
  return out;
}

int CmdAdversarial(const Options& o, std::ostream& out) {
  if (o.kind == "appendixB") {
    const int r = o.r_given ? o.r : 3;
    const std::vector<std::int64_t> sizes = SweepValues(o.sweep, "8,40");
    Json config{{"kind", o.kind}, {"r", r}, {"sweep", sizes}};
    Json doc = BaseDoc("adversarial", o, std::move(config));
    std::vector<CliquePathReport> reports;
    for (std::int64_t n : sizes) {
      reports.push_back(RunCliquePath(ParseCount(std::to_string(n), "N"), r));
    }
    if (o.format == "csv") {
      std::ostringstream csv;
      csv << CsvHeader(doc)
          << "N,r,n,rpivot_cost,witness_cost,ratio,reference,unsettled\n";
      for (const CliquePathReport& p : reports) {
        csv << p.clique_size << ',' << p.rounds << ',' << p.n << ','
            << p.rpivot_cost << ',' << p.witness_cost << ',' << Num(p.ratio)
            << ',' << Num(p.reference) << ',' << p.unsettled << '\n';
      }
      Emit(o, out, csv.str());
      return 0;
    }
    Json points = Json::array();
    for (const CliquePathReport& p : reports) {
      points.push_back({{"N", p.clique_size},
                        {"r", p.rounds},
                        {"n", p.n},
                        {"rpivot_cost", p.rpivot_cost},
                        {"witness_cost", p.witness_cost},
                        {"ratio", p.ratio},
                        {"reference", p.reference},
                        {"pivots", p.pivots},
                        {"unsettled", p.unsettled}});
    }
    doc["result"] = Json{{"points", std::move(points)}};
    Emit(o, out, doc.dump(2) + "\n");
    return 0;
  }
  if (o.kind != "appendixA") {
    throw std::invalid_argument("adversarial kind must be appendixA or "
                                "appendixB");
  }
  const int r = o.r_given ? o.r : 1;
  const std::vector<std::int64_t> sizes = SweepValues(o.sweep, "256,6561");
  const std::string trials_text = o.trials.empty() ? "10000" : o.trials;
  const std::optional<std::int64_t> trials = ParseTrials(trials_text);
  if (!trials) throw std::invalid_argument("appendixA needs a trial count");
  Json config{{"kind", o.kind},
              {"r", r},
              {"sweep", sizes},
              {"trials", trials_text},
              {"budget", o.budget}};
  Json doc = BaseDoc("adversarial", o, std::move(config));
  std::vector<LayeredPoint> points;
  for (std::int64_t n : sizes) {
    points.push_back(
        RunLayeredPoint(r, n, *trials, o.seed, o.budget, o.threads));
  }
  bool monotone = true;
  for (std::size_t i = 1; i < points.size(); ++i) {
    monotone = monotone && points[i].ratio < points[i - 1].ratio;
  }
  double separation = 0;
  if (points.size() >= 2) {
    const LayeredPoint& a = points.front();
    const LayeredPoint& b = points.back();
    separation = (a.ratio - b.ratio) /
                 std::hypot(a.ratio_stderr, b.ratio_stderr);
  }
  if (o.format == "csv") {
    std::ostringstream csv;
    csv << CsvHeader(doc)
        << "requested_N,N,alpha,host_edges,line_graph_edges,trials,"
           "mean_full,stderr_full,mean_truncated,stderr_truncated,ratio,"
           "stderr_ratio\n";
    for (const LayeredPoint& p : points) {
      csv << p.params.requested_top << ',' << p.params.top << ','
          << p.params.alpha << ',' << p.params.host_edges << ','
          << p.params.line_graph_edges << ',' << p.trials << ','
          << Num(p.full.mean()) << ',' << Num(p.full.stderr_mean()) << ','
          << Num(p.truncated.mean()) << ',' << Num(p.truncated.stderr_mean())
          << ',' << Num(p.ratio) << ',' << Num(p.ratio_stderr) << '\n';
    }
    Emit(o, out, csv.str());
    return 0;
  }
  Json jp = Json::array();
  for (const LayeredPoint& p : points) {
    jp.push_back({{"params", ToJson(p.params)},
                  {"trials", p.trials},
                  {"pivot_set", ToJson(p.full)},
                  {"rpivot_set", ToJson(p.truncated)},
                  {"ratio", p.ratio},
                  {"stderr_ratio", p.ratio_stderr}});
  }
  doc["result"] = Json{{"points", std::move(jp)},
                       {"strictly_decreasing", monotone},
                       {"endpoint_separation_sigma", separation}};
  Emit(o, out, doc.dump(2) + "\n");
  return 0;
}

int CmdVerify(const Options& o, std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> kSuites = {"invariants", "oracle",
                                                   "executors", "all"};
  if (std::find(kSuites.begin(), kSuites.end(), o.suite) == kSuites.end()) {
    throw std::invalid_argument("suite must be invariants, oracle, executors "
                                "or all");
  }
  std::optional<std::int64_t> trials;
  if (!o.trials.empty()) {
    trials = ParseTrials(o.trials);
    if (!trials) {
      throw std::invalid_argument("verify takes a trial count; use "
                                  "--exhaustive-n for exhaustive sweeps");
    }
  }
  ExecutorCheckOptions exec;
  exec.local.corrupt_tie_break = o.corrupt_tie_break;
  // Ties need a small rank range to show up at all.
  exec.rank_exponent =
      o.exponent_given ? o.exponent : (o.corrupt_tie_break ? 1 : 3);

  Json config{{"suite", o.suite},
              {"trials", o.trials.empty() ? "default" : o.trials},
              {"exhaustive_n", o.exhaustive_n},
              {"exponent", exec.rank_exponent},
              {"corrupt_tie_break", o.corrupt_tie_break}};
  Json doc = BaseDoc("verify", o, std::move(config));
  std::vector<SuiteResult> results;
  const bool all = o.suite == "all";
  if (all || o.suite == "invariants") {
    results.push_back(RunInvariantSuite(trials.value_or(1000), o.seed));
  }
  if (all || o.suite == "oracle") {
    results.push_back(
        RunOracleSuite(trials.value_or(1000), o.seed, o.exhaustive_n));
  }
  if (all || o.suite == "executors") {
    results.push_back(RunExecutorSuite(trials.value_or(100), o.seed, exec));
  }
  bool passed = true;
  for (const SuiteResult& s : results) {
    passed = passed && s.passed;
    if (!s.passed) {
      err << "suite " << s.name << " FAILED: " << s.failure << "\n"
          << "reproducer:\n" << s.reproducer << "\n";
    }
  }
  if (o.format == "csv") {
    std::ostringstream csv;
    csv << CsvHeader(doc) << "suite,passed,instances\n";
    for (const SuiteResult& s : results) {
      csv << s.name << ',' << int(s.passed) << ',' << s.instances << '\n';
    }
    Emit(o, out, csv.str());
  } else {
    Json suites = Json::array();
    for (const SuiteResult& s : results) suites.push_back(ToJson(s));
    doc["result"] = Json{{"passed", passed}, {"suites", std::move(suites)}};
    Emit(o, out, doc.dump(2) + "\n");
  }
  return passed ? 0 : 1;
}

int CmdGen(const Options& o, std::ostream& out) {
  if (o.gen.empty()) throw std::invalid_argument("gen needs --gen");
  const GeneratedGraph g = Generate(o.gen, o.seed);
  if (o.out.empty()) {
    WriteGraphText(out, g.graph);
    return 0;
  }
  WriteGraphFile(o.out, g.graph);
  Json doc = BaseDoc("gen", o, Json{{"gen", o.gen}});
  doc["graph"] = g.meta;
  if (g.adversarial_order) {
    std::vector<std::uint32_t> keys(g.adversarial_order->keys().begin(),
                                    g.adversarial_order->keys().end());
    doc["adversarial_ranks"] = keys;
  }
  std::ofstream side(o.out + ".json");
  if (!side) throw std::runtime_error("cannot write " + o.out + ".json");
  side << doc.dump(2) << "\n";
  return 0;
}

}  // namespace

int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err) {
  Options o;
  CLI::App app{"rpivot: truncated Pivot correlation clustering experiments"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every command");
  auto* seed = app.add_option("--seed", o.seed, "Master seed (trial t uses "
                                                "substream t)");
  auto* trials = app.add_option(
      "--trials", o.trials,
      "Trial count (1e4 accepted) or 'exhaustive' for all permutations");
  auto* threads = app.add_option("--threads", o.threads,
                                 "Worker threads for Monte-Carlo trials");
  threads->check(CLI::Range(1, 1024));
  auto* outp = app.add_option("--out", o.out, "Output path (default stdout)");
  auto* format = app.add_option("--format", o.format, "json or csv")
                     ->check(CLI::IsMember({"json", "csv"}));
  for (CLI::Option* opt : {seed, trials, threads, outp, format}) {
    opt->configurable();
  }

  auto add_source = [&](CLI::App* c) {
    c->add_option("--gen", o.gen, kGeneratorHelp);
    c->add_option("--file", o.file, "Graph text file ('n m' then 'u v' lines)");
  };
  auto add_rounds = [&](CLI::App* c) {
    auto* r = c->add_option("--r", o.r, "Rounds of r-Pivot");
    auto* e = c->add_option(
        "--epsilon", o.epsilon,
        "Target slack; uses the smallest r with 8/(2r-1) <= epsilon, "
        "i.e. r = ceil((8/epsilon + 1)/2)");
    r->excludes(e);
  };

  CLI::App* run = app.add_subcommand("run", "Run one algorithm or executor");
  add_source(run);
  add_rounds(run);
  run->add_option("--algo", o.algo, "Algorithm")
      ->check(CLI::IsMember(kAlgorithms));
  run->add_option("--exponent", o.exponent,
                  "Integer ranks are drawn from [0, n^exponent)")
      ->check(CLI::Range(1, 8));
  run->add_option("--delta", o.delta, "MPC memory exponent, S = ceil(n^delta)");
  run->add_flag("--adversarial-order", o.adversarial_order,
                "Use the generator's built-in order (clique-path)");

  CLI::App* ratio = app.add_subcommand(
      "ratio", "Expected cost and extra mistakes relative to opt");
  add_source(ratio);
  add_rounds(ratio);
  ratio->add_option("--opt", o.opt, "Known optimum (skips brute force)")
      ->check(CLI::NonNegativeNumber);

  CLI::App* width = app.add_subcommand(
      "width", "Per-pair charge width and R-counts (CSV by default)");
  add_source(width);
  add_rounds(width);

  CLI::App* adv = app.add_subcommand("adversarial",
                                     "Lower-bound constructions");
  adv->add_option("kind", o.kind, "appendixA or appendixB")
      ->required()
      ->check(CLI::IsMember({"appendixA", "appendixB"}));
  adv->add_option("--r", o.r, "Rounds (default 1 for appendixA, 3 for "
                              "appendixB)");
  adv->add_option("--N", o.sweep, "Single size (same as a one-entry --sweep)");
  adv->add_option("--sweep", o.sweep,
                  "Comma-separated sizes (defaults 256,6561 and 8,40)");
  adv->add_option("--budget", o.budget, "Host edge budget for appendixA");

  CLI::App* verify = app.add_subcommand("verify", "Exact invariant suites");
  verify->add_option("suite", o.suite, "invariants, oracle, executors or all");
  verify->add_option("--exhaustive-n", o.exhaustive_n,
                     "Every graph up to this size, all permutations (<= 7)")
      ->check(CLI::Range(0, 7));
  verify->add_option("--exponent", o.exponent,
                     "Integer rank exponent for the executor suite")
      ->check(CLI::Range(1, 8));
  verify->add_flag("--corrupt-tie-break", o.corrupt_tie_break,
                   "Break LOCAL rank ties the wrong way (negative control)");

  CLI::App* gen = app.add_subcommand(
      "gen", "Write a generated graph (and OUT.json metadata with --out)");
  gen->add_option("--gen", o.gen, kGeneratorHelp)->required();

  for (CLI::App* sub : {run, ratio, width, adv, verify, gen}) {
    sub->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  o.format_given = format->count() > 0;
  CLI::App* chosen = app.get_subcommands().front();
  auto given = [&](const std::string& name) {
    const CLI::Option* opt = chosen->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  o.r_given = given("--r");
  o.epsilon_given = given("--epsilon");
  o.exponent_given = given("--exponent");

  try {
    if (run->parsed()) return CmdRun(o, out);
    if (ratio->parsed()) return CmdRatio(o, out);
    if (width->parsed()) return CmdWidth(o, out);
    if (adv->parsed()) return CmdAdversarial(o, out);
    if (verify->parsed()) return CmdVerify(o, out, err);
    if (gen->parsed()) return CmdGen(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace rpivot::cli
