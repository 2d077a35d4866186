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

#include "rpivot/graph_io.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace rpivot {

namespace {

struct Token {
  std::string text;
  int line;
};

std::vector<Token> Tokenize(std::istream& in) {
  std::vector<Token> tokens;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) tokens.push_back({tok, line_no});
  }
  return tokens;
}

bool ParseInt(const std::string& s, long long& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

[[noreturn]] void Fail(int line, const std::string& what) {
  throw std::runtime_error("graph text line " + std::to_string(line) + ": " +
                           what);
}

}  // namespace

LabeledGraph ReadGraphText(std::istream& in) {
  const std::vector<Token> tokens = Tokenize(in);
  if (tokens.size() < 2) Fail(tokens.empty() ? 1 : tokens[0].line,
                              "expected header 'n m'");
  long long n = 0, m = 0;
  if (!ParseInt(tokens[0].text, n) || n < 0 || n > (1LL << 31) - 2) {
    Fail(tokens[0].line, "bad vertex count '" + tokens[0].text + "'");
  }
  if (!ParseInt(tokens[1].text, m) || m < 0) {
    Fail(tokens[1].line, "bad edge count '" + tokens[1].text + "'");
  }
  const std::size_t body = tokens.size() - 2;
  if (body != static_cast<std::size_t>(2 * m)) {
    Fail(tokens.back().line, "header promises " + std::to_string(m) +
                                 " edges, found " + std::to_string(body / 2) +
                                 (body % 2 ? " and a dangling endpoint" : ""));
  }

  bool identity = true;
  for (std::size_t i = 2; i < tokens.size() && identity; ++i) {
    long long id = 0;
    identity = ParseInt(tokens[i].text, id) && id >= 0 && id < n;
  }

  LabeledGraph out;
  out.identity_labels = identity;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  if (identity) {
    for (std::size_t i = 2; i < tokens.size(); i += 2) {
      long long a = 0, b = 0;
      ParseInt(tokens[i].text, a);
      ParseInt(tokens[i + 1].text, b);
      if (a == b) Fail(tokens[i].line, "self-loop on " + tokens[i].text);
      edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b)});
    }
    out.labels.resize(static_cast<std::size_t>(n));
    for (long long v = 0; v < n; ++v) out.labels[v] = std::to_string(v);
  } else {
    std::unordered_map<std::string, VertexId> ids;
    auto lookup = [&](const Token& t) {
      auto [it, inserted] =
          ids.emplace(t.text, static_cast<VertexId>(out.labels.size()));
      if (inserted) {
        if (static_cast<long long>(out.labels.size()) >= n) {
          Fail(t.line, "more than n=" + std::to_string(n) +
                           " distinct vertex labels");
        }
        out.labels.push_back(t.text);
      }
      return it->second;
    };
    for (std::size_t i = 2; i < tokens.size(); i += 2) {
      if (tokens[i].text == tokens[i + 1].text) {
        Fail(tokens[i].line, "self-loop on " + tokens[i].text);
      }
      const VertexId a = lookup(tokens[i]);
      const VertexId b = lookup(tokens[i + 1]);
      edges.push_back({a, b});
    }
    for (long long v = static_cast<long long>(out.labels.size()); v < n; ++v) {
      out.labels.push_back("_isolated_" + std::to_string(v));
    }
  }
  out.graph = Graph::Build(static_cast<VertexId>(n), edges);
  return out;
}

LabeledGraph ReadGraphFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  return ReadGraphText(in);
}

void WriteGraphText(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.Edges()) out << e.u << ' ' << e.v << '\n';
}

void WriteGraphFile(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file '" + path + "'");
  WriteGraphText(out, g);
}

}  // namespace rpivot
