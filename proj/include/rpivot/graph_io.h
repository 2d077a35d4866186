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

// Graph text format:
//
//   # comment (anywhere; runs to end of line)
//   n m
//   u v        (m lines)
//
// Endpoints are normally 0-based IDs. Any other labels are accepted and
// remapped to dense IDs by first appearance; the mapping is returned so
// results can be reported in the caller's labels.

#ifndef RPIVOT_GRAPH_IO_H_
#define RPIVOT_GRAPH_IO_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "rpivot/graph.h"

namespace rpivot {

struct LabeledGraph {
  Graph graph;
  // labels[v] is the input label of vertex v.
  std::vector<std::string> labels;
  // True when every label was already the decimal ID in [0, n).
  bool identity_labels = true;
};

// Throws std::runtime_error with a line number on malformed input, and
// std::invalid_argument (from Graph::Build) on self-loops.
LabeledGraph ReadGraphText(std::istream& in);
LabeledGraph ReadGraphFile(const std::string& path);

// Edges written with u < v in lexicographic order.
void WriteGraphText(std::ostream& out, const Graph& g);
void WriteGraphFile(const std::string& path, const Graph& g);

}  // namespace rpivot

#endif  // RPIVOT_GRAPH_IO_H_
