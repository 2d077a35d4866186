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


// JSON views of library results. Every document produced by the CLI carries
// kSchemaVersion; bump it whenever a field changes.

#ifndef RPIVOT_JSON_IO_H_
#define RPIVOT_JSON_IO_H_

#include "json.hpp"
#include "rpivot/executors.h"
#include "rpivot/exact.h"
#include "rpivot/generators.h"
#include "rpivot/graph.h"
#include "rpivot/oracle.h"
#include "rpivot/pivot.h"
#include "rpivot/verify.h"

namespace rpivot {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

Json ToJson(const Clustering& c);
Json ToJson(const Graph& g, const PivotRun& run);
Json ToJson(const Graph& g, const RPivotState& state);
Json ToJson(const ExtraMistakes& x);
Json ToJson(const ResourceReport& report);
Json ToJson(const QueryTrace& trace);
Json ToJson(const StackPath& path);
Json ToJson(const ChargeRecord& charge);
Json ToJson(const LayeredParams& params);
Json ToJson(const Metadata& metadata);
Json ToJson(const SuiteResult& suite);
Json ToJson(const RunningStats& stats);
Json ToJson(const CostEstimate& estimate);

const char* MistakeCaseName(MistakeCase kind);

}  // namespace rpivot

#endif  // RPIVOT_JSON_IO_H_
