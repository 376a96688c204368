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

#ifndef MCG_GRAPH_HPP
#define MCG_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcg/error.hpp"

namespace mcg {

using VertexId = int;
using EdgeId = int;

struct Edge {
  VertexId u;
  VertexId v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph on vertices 0..n-1. Edge IDs are the
// positions in the edge list, each edge stored with u < v.
class Graph {
 public:
  Graph() = default;

  // Validates and canonicalizes. Throws SelfLoop, DuplicateEdge or
  // VertexOutOfRange.
  Graph(int n, std::span<const std::pair<int, int>> pairs) : n_(n) {
    if (n < 0) throw Error(ErrorCode::kBadParams, "negative vertex count");
    edges_.reserve(pairs.size());
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : pairs) {
      if (a < 0 || b < 0 || a >= n || b >= n) {
        throw Error(ErrorCode::kVertexOutOfRange,
                    "edge (" + std::to_string(a) + "," + std::to_string(b) +
                        ") with n=" + std::to_string(n));
      }
      if (a == b) {
        throw Error(ErrorCode::kSelfLoop, "loop at vertex " + std::to_string(a));
      }
      if (a > b) std::swap(a, b);
      if (!seen.emplace(a, b).second) {
        throw Error(ErrorCode::kDuplicateEdge,
                    "edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
      edges_.push_back({a, b});
    }
    build_incidence();
  }

  Graph(int n, std::initializer_list<std::pair<int, int>> pairs)
      : Graph(n, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size())) {}

  int n() const noexcept { return n_; }
  int m() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }

  // Incident edge IDs of v, ascending.
  const std::vector<EdgeId>& incident(VertexId v) const {
    return incident_.at(static_cast<std::size_t>(v));
  }
  const std::vector<VertexId>& neighbors(VertexId v) const {
    return neighbors_.at(static_cast<std::size_t>(v));
  }
  int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

  bool has_edge(VertexId a, VertexId b) const {
    const auto& nb = neighbors(a);
    return std::find(nb.begin(), nb.end(), b) != nb.end();
  }

  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.emplace_back(e.u, e.v);
    return out;
  }

  // Row-major n*n 0/1 matrix.
  std::vector<std::uint8_t> adjacency_matrix() const {
    std::vector<std::uint8_t> adj(static_cast<std::size_t>(n_) * n_, 0);
    for (const auto& e : edges_) {
      adj[static_cast<std::size_t>(e.u) * n_ + e.v] = 1;
      adj[static_cast<std::size_t>(e.v) * n_ + e.u] = 1;
    }
    return adj;
  }

  // Neighbour bitmasks; only valid for n <= 64.
  std::vector<std::uint64_t> adjacency_masks() const {
    if (n_ > 64) throw Error(ErrorCode::kSizeLimitExceeded, "bitmask view needs n <= 64");
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(n_), 0);
    for (const auto& e : edges_) {
      masks[e.u] |= std::uint64_t{1} << e.v;
      masks[e.v] |= std::uint64_t{1} << e.u;
    }
    return masks;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void build_incidence() {
    incident_.assign(static_cast<std::size_t>(n_), {});
    neighbors_.assign(static_cast<std::size_t>(n_), {});
    for (EdgeId id = 0; id < m(); ++id) {
      const auto& e = edges_[id];
      incident_[e.u].push_back(id);
      incident_[e.v].push_back(id);
    }
    for (VertexId v = 0; v < n_; ++v) {
      for (EdgeId id : incident_[v]) {
        const auto& e = edges_[id];
        neighbors_[v].push_back(e.u == v ? e.v : e.u);
      }
      std::sort(neighbors_[v].begin(), neighbors_[v].end());
    }
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<std::vector<VertexId>> neighbors_;
};

inline Graph make_graph(int n, std::span<const std::pair<int, int>> pairs) {
  return Graph(n, pairs);
}

struct DegreeProfile {
  std::vector<int> degrees;
  int delta_min = 0;
  int delta_max = 0;
  std::vector<VertexId> v_delta;  // minimum-degree vertices
};

inline DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.resize(static_cast<std::size_t>(g.n()));
  for (VertexId v = 0; v < g.n(); ++v) p.degrees[v] = g.degree(v);
  if (g.n() == 0) return p;
  p.delta_min = *std::min_element(p.degrees.begin(), p.degrees.end());
  p.delta_max = *std::max_element(p.degrees.begin(), p.degrees.end());
  for (VertexId v = 0; v < g.n(); ++v) {
    if (p.degrees[v] == p.delta_min) p.v_delta.push_back(v);
  }
  return p;
}

// Component index per vertex, numbered in order of smallest member.
inline std::vector<int> components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.n()), -1);
  int next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.n(); ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(v)) {
        if (comp[w] == -1) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

// The null graph counts as connected here; the mincut routines treat n <= 1
// separately anyway.
inline bool is_connected(const Graph& g) {
  const auto comp = components(g);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

inline Graph line_graph(const Graph& g) {
  std::vector<std::pair<int, int>> pairs;
  for (EdgeId i = 0; i < g.m(); ++i) {
    const auto& a = g.edge(i);
    for (EdgeId j = i + 1; j < g.m(); ++j) {
      const auto& b = g.edge(j);
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) pairs.emplace_back(i, j);
    }
  }
  return Graph(g.m(), pairs);
}

// Copy A keeps IDs, copy B is shifted by n; edge IDs: A edges, B edges, then
// the matching (v, v+n) in vertex order.
inline Graph cartesian_product_k2(const Graph& g) {
  const int n = g.n();
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(2 * g.m() + n));
  for (const auto& e : g.edges()) pairs.emplace_back(e.u, e.v);
  for (const auto& e : g.edges()) pairs.emplace_back(e.u + n, e.v + n);
  for (VertexId v = 0; v < n; ++v) pairs.emplace_back(v, v + n);
  return Graph(2 * n, pairs);
}

inline Graph vertex_join(const Graph& g) {
  auto pairs = g.pairs();
  for (VertexId v = 0; v < g.n(); ++v) pairs.emplace_back(v, g.n());
  return Graph(g.n() + 1, pairs);
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  auto pairs = g.pairs();
  for (const auto& e : h.edges()) pairs.emplace_back(e.u + g.n(), e.v + g.n());
  return Graph(g.n() + h.n(), pairs);
}

// Merges the endpoints of e into the smaller one, drops the loop and any
// parallel edges (first occurrence wins), and closes the gap in vertex IDs.
inline Graph contract_edge(const Graph& g, EdgeId e) {
  if (e < 0 || e >= g.m()) throw Error(ErrorCode::kBadEdgeId, std::to_string(e));
  const auto [keep, gone] = g.edge(e);
  auto relabel = [keep = keep, gone = gone](VertexId x) {
    if (x == gone) return keep;
    return x > gone ? x - 1 : x;
  };
  std::vector<std::pair<int, int>> pairs;
  std::set<std::pair<int, int>> seen;
  for (const auto& ed : g.edges()) {
    int a = relabel(ed.u);
    int b = relabel(ed.v);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (seen.emplace(a, b).second) pairs.emplace_back(a, b);
  }
  return Graph(g.n() - 1, pairs);
}

// Vertex i of the result is vs[i].
inline Graph induced_subgraph(const Graph& g, std::span<const VertexId> vs) {
  std::vector<int> pos(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const VertexId v = vs[i];
    if (v < 0 || v >= g.n() || pos[v] != -1) {
      throw Error(ErrorCode::kBadVertexSet, "vertex " + std::to_string(v));
    }
    pos[v] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : g.edges()) {
    if (pos[e.u] != -1 && pos[e.v] != -1) pairs.emplace_back(pos[e.u], pos[e.v]);
  }
  return Graph(static_cast<int>(vs.size()), pairs);
}

// Vertices are relabelled v -> perm[v].
inline Graph relabel(const Graph& g, std::span<const VertexId> perm) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(g.m()));
  for (const auto& e : g.edges()) pairs.emplace_back(perm[e.u], perm[e.v]);
  return Graph(g.n(), pairs);
}

namespace families {

inline Graph empty(int n) { return Graph(n, std::span<const std::pair<int, int>>{}); }

inline Graph path(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Graph(n, pairs);
}

// Star on n vertices (K_{1,n-1}), centre 0.
inline Graph star(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n; ++i) pairs.emplace_back(0, i);
  return Graph(n, pairs);
}

inline Graph cycle(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  pairs.emplace_back(0, n - 1);
  return Graph(n, pairs);
}

// n vertices in total: hub 0 then rim 1..n-1. Spokes come first in edge order.
inline Graph wheel(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n; ++i) pairs.emplace_back(0, i);
  for (int i = 1; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  pairs.emplace_back(1, n - 1);
  return Graph(n, pairs);
}

inline Graph complete(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return Graph(n, pairs);
}

// Parts 0..a-1 and a..a+b-1.
inline Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) pairs.emplace_back(i, a + j);
  return Graph(a + b, pairs);
}

// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram.
inline Graph petersen() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i) pairs.emplace_back(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i) pairs.emplace_back(i, i + 5);
  for (int i = 0; i < 5; ++i) pairs.emplace_back(5 + i, 5 + (i + 2) % 5);
  return Graph(10, pairs);
}

// Triangle 0,1,2 with pendant 3 hung on 2.
inline Graph paw() { return Graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}); }

// Uniform labelled tree from a Pruefer sequence.
inline Graph random_tree(int n, std::uint64_t seed) {
  if (n <= 2) return path(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (auto& c : code) c = pick(rng);
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int c : code) ++degree[c];
  std::vector<std::pair<int, int>> pairs;
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (int c : code) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    pairs.emplace_back(std::min(leaf, c), std::max(leaf, c));
    if (--degree[c] == 1) leaves.insert(c);
  }
  const int a = *leaves.begin();
  const int b = *std::next(leaves.begin());
  pairs.emplace_back(a, b);
  return Graph(n, pairs);
}

}  // namespace families

// Named family lookup used by the CLI and the law registry.
//   empty n | path n | star n | random_tree n seed | cycle n | wheel n |
//   complete n | complete_bipartite a b | petersen | paw |
//   line_complete n | complete_prism n (K_n x K_2)
inline Graph family(std::string_view name, std::span<const int> params) {
  auto need = [&](std::size_t count, int min_first) {
    if (params.size() != count || (count > 0 && params[0] < min_first)) {
      throw Error(ErrorCode::kBadParams, std::string(name));
    }
  };
  if (name == "empty") { need(1, 0); return families::empty(params[0]); }
  if (name == "path") { need(1, 1); return families::path(params[0]); }
  if (name == "star") { need(1, 1); return families::star(params[0]); }
  if (name == "random_tree") {
    need(2, 1);
    return families::random_tree(params[0], static_cast<std::uint64_t>(params[1]));
  }
  if (name == "cycle") { need(1, 3); return families::cycle(params[0]); }
  if (name == "wheel") { need(1, 4); return families::wheel(params[0]); }
  if (name == "complete") { need(1, 0); return families::complete(params[0]); }
  if (name == "complete_bipartite") {
    need(2, 1);
    if (params[1] < 1) throw Error(ErrorCode::kBadParams, std::string(name));
    return families::complete_bipartite(params[0], params[1]);
  }
  if (name == "petersen") { need(0, 0); return families::petersen(); }
  if (name == "paw") { need(0, 0); return families::paw(); }
  if (name == "line_complete") { need(1, 1); return line_graph(families::complete(params[0])); }
  if (name == "complete_prism") {
    need(1, 1);
    return cartesian_product_k2(families::complete(params[0]));
  }
  throw Error(ErrorCode::kBadParams, "unknown family '" + std::string(name) + "'");
}

}  // namespace mcg

#endif  // MCG_GRAPH_HPP
