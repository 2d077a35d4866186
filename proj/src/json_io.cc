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


#include "rpivot/json_io.h"

namespace rpivot {

const char* MistakeCaseName(MistakeCase kind) {
  return kind == MistakeCase::kPivotUnsettled ? "pivot_unsettled"
                                              : "unsettled_witness";
}

Json ToJson(const Clustering& c) {
  return Json{{"num_clusters", c.num_clusters()},
              {"cluster_id", std::vector<ClusterId>(c.ids().begin(),
                                                    c.ids().end())}};
}

Json ToJson(const Graph& g, const PivotRun& run) {
  Json j;
  j["pivots"] = run.pivots;
  j["pivot_of"] = run.pivot_of;
  if (run.rounds_used > 0) {
    j["rounds_used"] = run.rounds_used;
    j["round_of_pivot"] = run.round_of_pivot;
  }
  j["clusters"] = ToJson(run.clustering);
  j["cost"] = ClusteringCost(g, run.clustering);
  return j;
}

Json ToJson(const Graph& g, const RPivotState& state) {
  Json j;
  j["rounds"] = state.rounds;
  j["pivots"] = state.pivots;
  std::vector<int> settled(state.settled.begin(), state.settled.end());
  j["settled"] = settled;
  j["unsettled_after"] = state.unsettled_after;
  j["cluster_pivot"] = state.cluster_pivot;
  j["clusters"] = ToJson(state.clustering);
  j["cost"] = ClusteringCost(g, state.clustering);
  return j;
}

Json ToJson(const ExtraMistakes& x) {
  Json pairs = Json::array();
  for (const ExtraMistake& m : x.pairs) {
    Json p{{"u", m.u},
           {"v", m.v},
           {"common_pivot", m.common_pivot},
           {"case", MistakeCaseName(m.kind)}};
    if (m.witness != kNoVertex) {
      p["witness"] = m.witness;
      p["witness_endpoint"] = m.witness_endpoint;
    }
    pairs.push_back(std::move(p));
  }
  return Json{{"rounds", x.rounds}, {"count", x.pairs.size()},
              {"pairs", std::move(pairs)}};
}

Json ToJson(const ResourceReport& r) {
  Json j{{"model", r.model}, {"passes_or_rounds", r.passes_or_rounds}};
  if (r.model == "streaming") {
    j["peak_memory_words"] = r.peak_memory_words;
  } else if (r.model == "local") {
    j["max_message_bits"] = r.max_message_bits;
    j["total_messages"] = r.total_messages;
  } else if (r.model == "mpc") {
    j["machine_capacity_words"] = r.machine_capacity_words;
    j["max_machine_load_words"] = r.max_machine_load_words;
    j["machine_count"] = r.machine_count;
    j["primitives"] = r.primitives;
    j["booked_round_constant"] = r.booked_round_constant;
    j["rounds_per_primitive"] = r.rounds_per_primitive;
  } else if (r.model == "lca") {
    j["probes"] = r.probes;
  }
  return j;
}

Json ToJson(const QueryTrace& t) {
  Json j{{"result", t.result},
         {"direct_query_count", t.direct_query_count},
         {"max_stack", t.max_stack},
         {"root_queries", t.root_queries},
         {"first_stack", t.first_stack}};
  if (t.truncated_at) j["truncated_at"] = *t.truncated_at;
  if (!t.events.empty()) {
    Json events = Json::array();
    for (VertexId e : t.events) {
      events.push_back(e >= 0 ? Json{{"push", e}} : Json{{"pop", true}});
    }
    j["events"] = std::move(events);
  }
  return j;
}

Json ToJson(const StackPath& p) {
  return Json{{"pair", {p.u, p.v}},
              {"ell", p.ell},
              {"vertices", p.vertices},
              {"both_query_first", p.both_query_first}};
}

Json ToJson(const ChargeRecord& c) {
  return Json{{"pair", {c.u, c.v}},
              {"ell", c.ell},
              {"triangle", {c.triangle.a, c.triangle.b, c.triangle.c}}};
}

Json ToJson(const LayeredParams& p) {
  return Json{{"r", p.rounds},
              {"t", p.layers},
              {"requested_N", p.requested_top},
              {"N", p.top},
              {"alpha", p.alpha},
              {"layer_size", p.layer_size},
              {"right_degree", p.right_degree},
              {"left_degree", p.left_degree},
              {"host_edges", p.host_edges},
              {"line_graph_edges", p.line_graph_edges}};
}

Json ToJson(const Metadata& metadata) {
  Json j = Json::object();
  for (const auto& [k, v] : metadata) j[k] = v;
  return j;
}

Json ToJson(const SuiteResult& s) {
  Json j{{"suite", s.name}, {"passed", s.passed}, {"instances", s.instances}};
  if (!s.passed) {
    j["failure"] = s.failure;
    j["reproducer"] = s.reproducer;
  }
  return j;
}

Json ToJson(const RunningStats& s) {
  return Json{{"mean", s.mean()}, {"stderr", s.stderr_mean()},
              {"trials", s.count()}};
}

Json ToJson(const CostEstimate& e) {
  return Json{{"mean", e.mean}, {"stderr", e.stderr_mean},
              {"trials", e.trials}, {"exhaustive", e.exhaustive}};
}

}  // namespace rpivot
