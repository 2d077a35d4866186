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


// Command-line driver. Kept in a library so tests can run commands in
// process and inspect their output.

#ifndef RPIVOT_TOOLS_CLI_H_
#define RPIVOT_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rpivot/graph.h"
#include "rpivot/json_io.h"
#include "rpivot/rank.h"

namespace rpivot::cli {

// Smallest r with 8 / (2r - 1) <= epsilon. Throws std::invalid_argument
// unless epsilon > 0.
int RoundsForEpsilon(double epsilon);

struct GeneratedGraph {
  Graph graph;
  Json meta;  // generator name, parameters, seed and derived metadata
  std::optional<RankAssignment> adversarial_order;
};

// Parses a generator spec such as "er:20,0.5,3" or "cliques:3,3" (see
// --help of the gen command). `seed` is used where the spec omits one.
// Throws std::invalid_argument with the accepted forms on bad input.
GeneratedGraph Generate(const std::string& spec, std::uint64_t seed);

// Parses --trials: a positive integer (1e4 notation accepted) or
// "exhaustive", which yields nullopt.
std::optional<std::int64_t> ParseTrials(const std::string& text);

// Runs the command line. Artifacts go to `out` unless --out names a file;
// diagnostics go to `err`. Returns the process exit status.
int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err);

}  // namespace rpivot::cli

#endif  // RPIVOT_TOOLS_CLI_H_
