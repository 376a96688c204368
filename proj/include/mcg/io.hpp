// Copyright 2026 The mcg Authors
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

#ifndef MCG_IO_HPP
#define MCG_IO_HPP

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "mcg/error.hpp"
#include "mcg/graph.hpp"

namespace mcg::io {

namespace detail {

// Graph construction errors surface as ParseError from the readers.
template <typename F>
Graph checked(F&& build) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParseError) throw;
    throw Error(ErrorCode::kParseError, e.what());
  }
}

}  // namespace detail

// Edge-list text: "n m", then m lines "u v". Lines starting with '#' and
// blank lines are ignored.
inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<long long>> rows;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<long long> row;
    long long x = 0;
    while (ls >> x) row.push_back(x);
    if (!ls.eof() || row.size() != 2) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + ": expected two integers");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorCode::kParseError, "missing header line");
  const long long n = rows[0][0];
  const long long m = rows[0][1];
  if (n < 0 || m < 0) throw Error(ErrorCode::kParseError, "negative header value");
  if (static_cast<long long>(rows.size()) - 1 != m) {
    throw Error(ErrorCode::kParseError, "header declares " + std::to_string(m) +
                                            " edges, found " +
                                            std::to_string(rows.size() - 1));
  }
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    pairs.emplace_back(static_cast<int>(rows[i][0]), static_cast<int>(rows[i][1]));
  }
  return detail::checked([&] { return Graph(static_cast<int>(n), pairs); });
}

inline std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

inline nlohmann::ordered_json to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  return j;
}

inline Graph from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw Error(ErrorCode::kParseError, "edge entries must be [u, v]");
      }
      pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return detail::checked([&] { return Graph(n, pairs); });
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

inline Graph parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  return from_json(j);
}

// Picks JSON when the first significant character is '{'.
inline Graph parse_graph(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '#') {
      i = text.find('\n', i);
      if (i == std::string_view::npos) break;
      continue;
    }
    return c == '{' ? parse_json(text) : parse_edge_list(text);
  }
  throw Error(ErrorCode::kParseError, "empty input");
}

inline std::string to_dot(const Graph& g, std::string_view name = "G") {
  std::string out = "graph " + std::string(name) + " {\n";
  for (VertexId v = 0; v < g.n(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (EdgeId id = 0; id < g.m(); ++id) {
    const auto& e = g.edge(id);
    out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) +
           " [label=\"e" + std::to_string(id) + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace mcg::io

#endif  // MCG_IO_HPP
