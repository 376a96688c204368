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

#ifndef MCG_SYNTHESIS_HPP
#define MCG_SYNTHESIS_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "mcg/error.hpp"
#include "mcg/graph.hpp"
#include "mcg/intersection.hpp"
#include "mcg/iso.hpp"
#include "mcg/mincut.hpp"

namespace mcg {

struct SynthesisReport {
  Graph host;
  std::vector<VertexId> embedded_vertices;  // G-vertex v sits at host vertex embedded_vertices[v]
  int target_degree = 0;
  int clique_size = 0;
  int retries = 0;            // target-degree bumps before success
  std::vector<int> failed_targets;
  IsoResult verified;         // X(host) -> G
};

// One construction round: G plus K_{t+2}, every G-vertex topped up to degree
// t by edges into the clique, handed out round-robin over clique vertices.
// G occupies host vertices 0..n-1.
inline Graph build_host(const Graph& g, int target_degree) {
  const int t = target_degree;
  if (t < degree_profile(g).delta_max) {
    throw Error(ErrorCode::kBadParams, "target degree below max degree");
  }
  const int clique = t + 2;
  Graph host = disjoint_union(g, families::complete(clique));
  auto pairs = host.pairs();
  int next = 0;
  for (VertexId v = 0; v < g.n(); ++v) {
    for (int k = g.degree(v); k < t; ++k) {
      pairs.emplace_back(v, g.n() + next);
      next = (next + 1) % clique;
    }
  }
  return Graph(host.n(), pairs);
}

struct SynthesisOptions {
  int max_retries = 4;
  EnumerationLimits limits{};
  IsoLimits iso_limits{};
};

// Builds hosts at t = max(Delta(G), 2), t+1, ... and returns the first whose
// mincut graph is isomorphic to G.
inline SynthesisReport synthesize_host(const Graph& g, const SynthesisOptions& options = {}) {
  if (g.n() < 1) throw Error(ErrorCode::kBadParams, "synthesis needs at least one vertex");
  if (options.max_retries < 1) throw Error(ErrorCode::kBadParams, "max_retries must be >= 1");
  const int start = std::max(degree_profile(g).delta_max, 2);
  SynthesisReport report;
  for (int bump = 0; bump <= options.max_retries; ++bump) {
    const int t = start + bump;
    Graph host = build_host(g, t);
    const MincutGraph x = build_mincut_graph(host, options.limits);
    IsoResult iso = isomorphic(x.graph, g, options.iso_limits);
    if (iso.isomorphic) {
      report.host = std::move(host);
      report.embedded_vertices.resize(static_cast<std::size_t>(g.n()));
      std::iota(report.embedded_vertices.begin(), report.embedded_vertices.end(), 0);
      report.target_degree = t;
      report.clique_size = t + 2;
      report.retries = bump;
      report.verified = std::move(iso);
      return report;
    }
    report.failed_targets.push_back(t);
  }
  throw Error(ErrorCode::kRetriesExhausted,
              "no verified host after " + std::to_string(options.max_retries) + " bumps");
}

// Upper bounds on the mincut intersection number: n*Delta - m, or
// n*(Delta+1) - m when the target degree had to be raised by one.
inline long long ix_upper_bound(const Graph& g, bool bumped) {
  const long long delta = degree_profile(g).delta_max + (bumped ? 1 : 0);
  return static_cast<long long>(g.n()) * delta - g.m();
}

// A family of r-subsets of {1..universe_size}, subsets[v] for vertex v.
struct IntersectionCertificate {
  int universe_size = 0;
  int r = 0;
  bool constrained = false;
  std::vector<std::vector<int>> subsets;
};

struct IntersectionSearchLimits {
  int max_universe = 16;
  std::uint64_t max_nodes = 200'000'000;
};

namespace detail {

class FamilySearch {
 public:
  FamilySearch(const Graph& g, int r, bool constrained, std::uint64_t max_nodes)
      : g_(g), r_(r), constrained_(constrained), max_nodes_(max_nodes) {
    // Breadth-first order so each new vertex already has placed neighbours.
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    for (VertexId s = 0; s < g.n(); ++s) {
      if (seen[s]) continue;
      std::queue<VertexId> q;
      q.push(s);
      seen[s] = 1;
      while (!q.empty()) {
        const VertexId v = q.front();
        q.pop();
        order_.push_back(v);
        for (VertexId w : g.neighbors(v)) {
          if (!seen[w]) {
            seen[w] = 1;
            q.push(w);
          }
        }
      }
    }
  }

  // Searches for a family over a universe of exactly `universe` elements.
  bool run(int universe) {
    universe_ = universe;
    sets_.assign(static_cast<std::size_t>(g_.n()), 0);
    multiplicity_.assign(static_cast<std::size_t>(universe), 0);
    return place(0, 0);
  }

  const std::vector<std::uint64_t>& sets() const { return sets_; }

 private:
  // Places order_[k]; elements 0..used-1 are taken, fresh ones are handed
  // out in increasing order since unused elements are interchangeable.
  bool place(std::size_t k, int used) {
    if (k == order_.size()) return used == universe_;
    if (++nodes_ > max_nodes_) {
      throw Error(ErrorCode::kSizeLimitExceeded, "intersection search budget exhausted");
    }
    const VertexId v = order_[k];
    std::uint64_t forbidden = 0;
    std::uint64_t saturated = 0;
    for (std::size_t j = 0; j < k; ++j) {
      const VertexId u = order_[j];
      if (!g_.has_edge(u, v)) forbidden |= sets_[u];
    }
    if (constrained_) {
      for (int e = 0; e < used; ++e) {
        if (multiplicity_[e] >= 2) saturated |= std::uint64_t{1} << e;
      }
    }
    const std::uint64_t used_mask = used == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << used) - 1;
    const std::uint64_t allowed = used_mask & ~forbidden & ~saturated;
    std::vector<int> pool;
    for (std::uint64_t a = allowed; a; a &= a - 1) pool.push_back(std::countr_zero(a));

    for (int fresh = 0; fresh <= r_; ++fresh) {
      const int reuse = r_ - fresh;
      if (used + fresh > universe_ || reuse > static_cast<int>(pool.size())) continue;
      std::uint64_t fresh_mask = 0;
      for (int f = 0; f < fresh; ++f) fresh_mask |= std::uint64_t{1} << (used + f);
      std::vector<int> pick(static_cast<std::size_t>(reuse));
      std::iota(pick.begin(), pick.end(), 0);
      while (true) {
        std::uint64_t s = fresh_mask;
        for (int i : pick) s |= std::uint64_t{1} << pool[i];
        if (consistent(k, v, s)) {
          sets_[v] = s;
          for (std::uint64_t b = s; b; b &= b - 1) ++multiplicity_[std::countr_zero(b)];
          if (place(k + 1, used + fresh)) return true;
          for (std::uint64_t b = s; b; b &= b - 1) --multiplicity_[std::countr_zero(b)];
          sets_[v] = 0;
        }
        int i = reuse - 1;
        const int p = static_cast<int>(pool.size());
        while (i >= 0 && pick[i] == p - reuse + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < reuse; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    return false;
  }

  bool consistent(std::size_t k, VertexId v, std::uint64_t s) const {
    for (std::size_t j = 0; j < k; ++j) {
      const VertexId u = order_[j];
      const std::uint64_t common = sets_[u] & s;
      if (sets_[u] == s) return false;
      if (g_.has_edge(u, v)) {
        if (common == 0) return false;
        if (constrained_ && std::popcount(common) > 1) return false;
      }
    }
    return true;
  }

  const Graph& g_;
  int r_;
  bool constrained_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  int universe_ = 0;
  std::vector<VertexId> order_;
  std::vector<std::uint64_t> sets_;
  std::vector<int> multiplicity_;
};

}  // namespace detail

// Smallest universe admitting an r-uniform family of distinct sets whose
// intersection graph is exactly g. With `constrained`, adjacent sets share
// exactly one element and no element lies in three or more sets.
inline IntersectionCertificate r_intersection_number(const Graph& g, int r, bool constrained,
                                                     const IntersectionSearchLimits& limits = {}) {
  if (r < 1) throw Error(ErrorCode::kBadParams, "r must be >= 1");
  if (limits.max_universe > 64) {
    throw Error(ErrorCode::kSizeLimitExceeded, "universe above 64 elements");
  }
  detail::FamilySearch search(g, r, constrained, limits.max_nodes);
  for (int s = (g.n() == 0 ? 0 : r); s <= limits.max_universe; ++s) {
    if (!search.run(s)) continue;
    IntersectionCertificate cert;
    cert.universe_size = s;
    cert.r = r;
    cert.constrained = constrained;
    for (std::uint64_t set : search.sets()) {
      std::vector<int> elems;
      for (std::uint64_t b = set; b; b &= b - 1) elems.push_back(std::countr_zero(b) + 1);
      cert.subsets.push_back(std::move(elems));
    }
    return cert;
  }
  throw Error(ErrorCode::kNotFoundWithinBound,
              "no family within universe " + std::to_string(limits.max_universe));
}

}  // namespace mcg

#endif  // MCG_SYNTHESIS_HPP
