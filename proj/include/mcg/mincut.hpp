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

#ifndef MCG_MINCUT_HPP
#define MCG_MINCUT_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <vector>

#include "mcg/error.hpp"
#include "mcg/graph.hpp"

namespace mcg {

using Cut = std::vector<EdgeId>;

// All minimum edge-cuts of a graph. Each cut is ascending; the list is
// sorted lexicographically.
struct MincutFamily {
  int lambda = 0;
  std::vector<Cut> cuts;

  friend bool operator==(const MincutFamily&, const MincutFamily&) = default;
};

struct EnumerationLimits {
  int max_n = 24;                                // bipartition sweep
  std::uint64_t max_subsets = 5'000'000;         // brute-force C(m, k)
};

// Edge-connectivity by Menger: the minimum, over t != 0, of the number of
// edge-disjoint 0-t paths. Zero for disconnected graphs and for n <= 1.
inline int edge_connectivity(const Graph& g) {
  const int n = g.n();
  if (n <= 1) return 0;
  // Residual capacities on the two arcs of each undirected edge.
  std::vector<int> cap(static_cast<std::size_t>(2 * g.m()));
  auto other = [&](EdgeId id, VertexId v) {
    const auto& e = g.edge(id);
    return e.u == v ? e.v : e.u;
  };
  // Arc 2*id runs u->v, arc 2*id+1 runs v->u.
  auto arc = [&](EdgeId id, VertexId from) { return 2 * id + (g.edge(id).u == from ? 0 : 1); };

  int best = std::numeric_limits<int>::max();
  std::vector<int> parent_arc(static_cast<std::size_t>(n));
  for (VertexId t = 1; t < n; ++t) {
    std::fill(cap.begin(), cap.end(), 1);
    int flow = 0;
    while (flow < best) {
      std::fill(parent_arc.begin(), parent_arc.end(), -1);
      std::queue<VertexId> q;
      q.push(0);
      parent_arc[0] = -2;
      while (!q.empty() && parent_arc[t] == -1) {
        const VertexId v = q.front();
        q.pop();
        for (EdgeId id : g.incident(v)) {
          const VertexId w = other(id, v);
          if (parent_arc[w] != -1 || cap[arc(id, v)] == 0) continue;
          parent_arc[w] = arc(id, v);
          q.push(w);
        }
      }
      if (parent_arc[t] == -1) break;
      for (VertexId v = t; v != 0;) {
        const int a = parent_arc[v];
        cap[a] -= 1;
        cap[a ^ 1] += 1;
        const auto& e = g.edge(a / 2);
        v = (a % 2 == 0) ? e.u : e.v;
      }
      ++flow;
    }
    best = std::min(best, flow);
    if (best == 0) break;
  }
  return best;
}

namespace detail {

inline Cut boundary_edges(const Graph& g, std::uint64_t side) {
  Cut cut;
  for (EdgeId id = 0; id < g.m(); ++id) {
    const auto& e = g.edge(id);
    const bool a = (side >> e.u) & 1;
    const bool b = (side >> e.v) & 1;
    if (a != b) cut.push_back(id);
  }
  return cut;
}

inline void canonicalize(MincutFamily& family) {
  for (auto& c : family.cuts) std::sort(c.begin(), c.end());
  std::sort(family.cuts.begin(), family.cuts.end());
  family.cuts.erase(std::unique(family.cuts.begin(), family.cuts.end()), family.cuts.end());
}

// Visits every vertex set S with 0 in S and S != V in Gray-code order,
// handing the running boundary size to visit(S, |boundary(S)|).
template <typename Visit>
void sweep_bipartitions(const std::vector<std::uint64_t>& adj, int n, Visit&& visit) {
  const std::uint64_t free_count = std::uint64_t{1} << (n - 1);
  const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  std::uint64_t side = 1;
  int boundary = std::popcount(adj[0]);
  for (std::uint64_t i = 0;;) {
    if (side != full) visit(side, boundary);
    if (++i == free_count) break;
    const int v = std::countr_zero(i) + 1;
    const std::uint64_t bit = std::uint64_t{1} << v;
    const int deg = std::popcount(adj[v]);
    if (side & bit) {
      side &= ~bit;
      boundary -= deg - 2 * std::popcount(adj[v] & side);
    } else {
      boundary += deg - 2 * std::popcount(adj[v] & side);
      side |= bit;
    }
  }
}

}  // namespace detail

// Sweeps all 2^(n-1) bipartitions containing vertex 0. A minimum cut leaves
// exactly two connected sides, so it is the boundary of exactly one such set.
inline MincutFamily enumerate_mincuts(const Graph& g, const EnumerationLimits& limits = {}) {
  MincutFamily family;
  if (g.n() <= 1 || !is_connected(g)) return family;
  if (g.n() > limits.max_n || g.n() > 63) {
    throw Error(ErrorCode::kSizeLimitExceeded,
                "mincut sweep over n=" + std::to_string(g.n()) + " exceeds max_n=" +
                    std::to_string(limits.max_n));
  }
  const auto adj = g.adjacency_masks();
  int lambda = std::numeric_limits<int>::max();
  detail::sweep_bipartitions(adj, g.n(), [&](std::uint64_t, int b) { lambda = std::min(lambda, b); });
  family.lambda = lambda;
  detail::sweep_bipartitions(adj, g.n(), [&](std::uint64_t side, int b) {
    if (b == lambda) family.cuts.push_back(detail::boundary_edges(g, side));
  });
  detail::canonicalize(family);
  return family;
}

namespace detail {

inline std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    if (r > cap) return cap + 1;
  }
  return r;
}

inline bool connected_without(const Graph& g, const std::vector<std::uint64_t>& adj,
                              const std::vector<EdgeId>& removed) {
  std::vector<std::uint64_t> a = adj;
  for (EdgeId id : removed) {
    const auto& e = g.edge(id);
    a[e.u] &= ~(std::uint64_t{1} << e.v);
    a[e.v] &= ~(std::uint64_t{1} << e.u);
  }
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= a[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == g.n();
}

}  // namespace detail

// Test oracle: tries every k-subset of edges for k = 1, 2, ... and keeps the
// disconnecting ones at the first k that has any.
inline MincutFamily brute_force_mincuts(const Graph& g, const EnumerationLimits& limits = {}) {
  MincutFamily family;
  if (g.n() <= 1 || !is_connected(g)) return family;
  if (g.n() > 64) throw Error(ErrorCode::kSizeLimitExceeded, "brute force needs n <= 64");
  const auto adj = g.adjacency_masks();
  const int m = g.m();
  for (int k = 1; k <= m; ++k) {
    if (detail::binomial_capped(m, k, limits.max_subsets) > limits.max_subsets) {
      throw Error(ErrorCode::kSizeLimitExceeded,
                  "C(" + std::to_string(m) + "," + std::to_string(k) + ") edge subsets");
    }
    std::vector<EdgeId> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      if (!detail::connected_without(g, adj, pick)) family.cuts.push_back(pick);
      int i = k - 1;
      while (i >= 0 && pick[i] == m - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!family.cuts.empty()) {
      family.lambda = k;
      break;
    }
  }
  detail::canonicalize(family);
  return family;
}

// Edge set incident on v, ascending.
inline Cut star_of(const Graph& g, VertexId v) { return g.incident(v); }

}  // namespace mcg

#endif  // MCG_MINCUT_HPP
