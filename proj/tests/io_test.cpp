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

#include "mcg/io.hpp"

#include <random>
#include <string>

#include "gtest/gtest.h"

namespace mcg {
namespace {

TEST(EdgeList, ParsesWithComments) {
  const Graph g = io::parse_edge_list(R"(# a triangle
3 3
0 1

# middle comment
1 2
2 0
)");
  EXPECT_EQ(g.n(), 3);
  EXPECT_EQ(g.m(), 3);
  EXPECT_EQ(g.edge(2), (Edge{0, 2}));
}

TEST(EdgeList, Errors) {
  auto parse_code = [](const std::string& text) {
    try {
      io::parse_graph(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kBadParams;  // sentinel: no error
  };
  EXPECT_EQ(parse_code("2 1\n0 0\n"), ErrorCode::kParseError);      // self-loop
  EXPECT_EQ(parse_code("3 2\n0 1\n1 0\n"), ErrorCode::kParseError);  // duplicate
  EXPECT_EQ(parse_code("3 2\n0 1\n"), ErrorCode::kParseError);       // count mismatch
  EXPECT_EQ(parse_code("3 1\n0 x\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse_code("3 1\n0 1 2\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse_code(""), ErrorCode::kParseError);
  EXPECT_EQ(parse_code("{\"n\": 2, \"edges\": [[0]]}"), ErrorCode::kParseError);
  EXPECT_EQ(parse_code("{\"n\": 2, \"edges\": [[0, 5]]}"), ErrorCode::kParseError);
  EXPECT_EQ(parse_code("{not json"), ErrorCode::kParseError);
}

TEST(Json, Parses) {
  const Graph g = io::parse_graph(R"({"n": 4, "edges": [[1, 0], [2, 3]]})");
  EXPECT_EQ(g.n(), 4);
  EXPECT_EQ(g.edge(0), (Edge{0, 1}));
}

// Both text formats reproduce the canonical graph, edge IDs included.
TEST(RoundTrip, RandomGraphs) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 9;
    std::bernoulli_distribution coin(0.4);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) pairs.emplace_back(j, i);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    const Graph g(n, pairs);
    EXPECT_EQ(io::parse_graph(io::to_edge_list(g)), g);
    EXPECT_EQ(io::parse_graph(io::to_json(g).dump()), g);
  }
}

TEST(Dot, ListsVerticesAndEdges) {
  const std::string dot = io::to_dot(families::path(3));
  EXPECT_NE(dot.find("graph G {"), std::string::npos);
  EXPECT_NE(dot.find("  2;"), std::string::npos);
  EXPECT_NE(dot.find("1 -- 2 [label=\"e1\"]"), std::string::npos);
}

}  // namespace
}  // namespace mcg
