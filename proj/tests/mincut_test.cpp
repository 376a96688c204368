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

#include "mcg/mincut.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "gtest/gtest.h"

namespace mcg {
namespace {

Graph without(const Graph& g, const Cut& cut) {
  std::vector<std::pair<int, int>> pairs;
  for (EdgeId id = 0; id < g.m(); ++id) {
    if (!std::binary_search(cut.begin(), cut.end(), id)) pairs.emplace_back(g.edge(id).u, g.edge(id).v);
  }
  return Graph(g.n(), pairs);
}

int component_count(const Graph& g) {
  const auto comp = components(g);
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

Graph random_connected(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  while (true) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) pairs.emplace_back(i, j);
    Graph g(n, pairs);
    if (is_connected(g)) return g;
  }
}

TEST(EdgeConnectivity, Examples) {
  EXPECT_EQ(edge_connectivity(families::cycle(7)), 2);
  EXPECT_EQ(edge_connectivity(families::wheel(6)), 3);
  EXPECT_EQ(edge_connectivity(families::random_tree(9, 4)), 1);
  EXPECT_EQ(edge_connectivity(families::petersen()), 3);
  EXPECT_EQ(edge_connectivity(families::complete(6)), 5);
  EXPECT_EQ(edge_connectivity(families::empty(1)), 0);
  EXPECT_EQ(edge_connectivity(families::empty(3)), 0);
  EXPECT_EQ(edge_connectivity(Graph()), 0);
}

TEST(EnumerateMincuts, CycleHasAllPairs) {
  const MincutFamily f = enumerate_mincuts(families::cycle(4));
  EXPECT_EQ(f.lambda, 2);
  const std::vector<Cut> expected = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  EXPECT_EQ(f.cuts, expected);
}

TEST(EnumerateMincuts, PathBridges) {
  const MincutFamily f = enumerate_mincuts(families::path(3));
  EXPECT_EQ(f.lambda, 1);
  EXPECT_EQ(f.cuts, (std::vector<Cut>{{0}, {1}}));
}

// Brute force over all C(15,3) = 455 edge triples of the Petersen graph.
TEST(EnumerateMincuts, PetersenStars) {
  const Graph p = families::petersen();
  const MincutFamily oracle = brute_force_mincuts(p);
  EXPECT_EQ(oracle.lambda, 3);
  ASSERT_EQ(oracle.cuts.size(), 10u);
  std::set<Cut> stars;
  for (int v = 0; v < 10; ++v) stars.insert(star_of(p, v));
  for (const auto& c : oracle.cuts) EXPECT_TRUE(stars.contains(c));
  EXPECT_EQ(enumerate_mincuts(p), oracle);
}

TEST(BruteForce, CompleteAndWheel) {
  const Graph k4 = families::complete(4);
  const MincutFamily f = brute_force_mincuts(k4);
  EXPECT_EQ(f.lambda, 3);
  ASSERT_EQ(f.cuts.size(), 4u);
  for (int v = 0; v < 4; ++v) {
    EXPECT_NE(std::find(f.cuts.begin(), f.cuts.end(), star_of(k4, v)), f.cuts.end());
  }
  const Graph w6 = families::wheel(6);
  const MincutFamily fw = brute_force_mincuts(w6);
  ASSERT_EQ(fw.cuts.size(), 5u);
  std::vector<Cut> rim_stars;
  for (int v = 1; v < 6; ++v) rim_stars.push_back(star_of(w6, v));
  std::sort(rim_stars.begin(), rim_stars.end());
  EXPECT_EQ(fw.cuts, rim_stars);
}

// Five-edge sets that disconnect with both sides connected (so minimal) are
// still not minimum: a degree-3 vertex yields a 3-edge cut.
TEST(EnumerateMincuts, MinimalButNotMinimumCutsExcluded) {
  const Graph w6 = families::wheel(6);
  const Cut spokes = {0, 1, 2, 3, 4};
  EXPECT_EQ(component_count(without(w6, spokes)), 2);
  const Graph p = families::petersen();
  const Cut petersen_spokes = {5, 6, 7, 8, 9};
  EXPECT_EQ(component_count(without(p, petersen_spokes)), 2);
  for (const auto& [g, cut] : {std::pair{w6, spokes}, std::pair{p, petersen_spokes}}) {
    for (EdgeId drop : cut) {
      Cut smaller;
      for (EdgeId e : cut)
        if (e != drop) smaller.push_back(e);
      EXPECT_TRUE(is_connected(without(g, smaller)));
    }
    for (const MincutFamily& f : {enumerate_mincuts(g), brute_force_mincuts(g)}) {
      EXPECT_EQ(f.lambda, 3);
      EXPECT_EQ(std::find(f.cuts.begin(), f.cuts.end(), cut), f.cuts.end());
    }
  }
}

TEST(EnumerateMincuts, DisconnectedAndTrivialAreEmpty) {
  EXPECT_EQ(enumerate_mincuts(families::empty(1)), MincutFamily{});
  EXPECT_EQ(enumerate_mincuts(families::empty(4)), MincutFamily{});
  EXPECT_EQ(enumerate_mincuts(disjoint_union(families::cycle(3), families::cycle(3))), MincutFamily{});
  EXPECT_EQ(brute_force_mincuts(families::empty(4)), MincutFamily{});
}

TEST(EnumerateMincuts, SizeGuard) {
  EnumerationLimits limits;
  limits.max_n = 6;
  try {
    enumerate_mincuts(families::cycle(7), limits);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeLimitExceeded);
  }
  limits.max_subsets = 10;
  try {
    brute_force_mincuts(families::complete(5), limits);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeLimitExceeded);
  }
}

TEST(EnumerateMincuts, CompleteBipartiteStars) {
  for (int n = 3; n <= 6; ++n) {
    for (int m = 2; m < n; ++m) {
      const Graph g = families::complete_bipartite(m, n);
      const MincutFamily f = enumerate_mincuts(g);
      EXPECT_EQ(f.lambda, m);
      std::vector<Cut> stars;
      for (int v = m; v < m + n; ++v) stars.push_back(star_of(g, v));
      std::sort(stars.begin(), stars.end());
      EXPECT_EQ(f.cuts, stars) << "K_{" << m << "," << n << "}";
    }
  }
}

class RandomGraphProperty : public ::testing::TestWithParam<int> {};

TEST_P(RandomGraphProperty, SweepMatchesOraclesAndCutInvariants) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()));
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 9;
    const double p = 0.25 + 0.1 * (trial % 6);
    const Graph g = random_connected(n, p, rng);
    const MincutFamily f = enumerate_mincuts(g);
    ASSERT_EQ(f, brute_force_mincuts(g));
    EXPECT_EQ(f.lambda, edge_connectivity(g));
    EXPECT_LE(f.lambda, degree_profile(g).delta_min);
    EXPECT_TRUE(std::is_sorted(f.cuts.begin(), f.cuts.end()));
    for (const Cut& c : f.cuts) {
      EXPECT_EQ(static_cast<int>(c.size()), f.lambda);
      EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
      EXPECT_EQ(component_count(without(g, c)), 2);
      for (EdgeId drop : c) {
        Cut smaller;
        for (EdgeId e : c)
          if (e != drop) smaller.push_back(e);
        EXPECT_TRUE(is_connected(without(g, smaller)));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomGraphProperty, ::testing::Range(1, 6));

}  // namespace
}  // namespace mcg
