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

#ifndef MCG_LAWS_HPP
#define MCG_LAWS_HPP

#include <algorithm>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcg/atlas.hpp"
#include "mcg/error.hpp"
#include "mcg/graph.hpp"
#include "mcg/intersection.hpp"
#include "mcg/iso.hpp"
#include "mcg/mincut.hpp"
#include "mcg/synthesis.hpp"

namespace mcg {

struct PropertyReport {
  bool is_regular = false;
  int regularity = -1;  // r when regular
  bool is_maximally_edge_connected = false;
  bool is_super_lambda = false;
  bool is_self_dual = false;
  bool mincut_graph_connected = false;
  int lambda = 0;
  int delta = 0;
  int mincut_count = 0;
};

// True when every cut in the family is the star of a vertex of minimum degree.
inline bool all_cuts_trivial(const Graph& g, const MincutFamily& family) {
  const auto profile = degree_profile(g);
  std::set<Cut> stars;
  for (VertexId v : profile.v_delta) stars.insert(star_of(g, v));
  return std::all_of(family.cuts.begin(), family.cuts.end(),
                     [&](const Cut& c) { return stars.contains(c); });
}

inline PropertyReport property_report(const Graph& g, const EnumerationLimits& limits = {}) {
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "property report needs a connected graph");
  PropertyReport p;
  const auto profile = degree_profile(g);
  const MincutFamily family = enumerate_mincuts(g, limits);
  p.lambda = family.lambda;
  p.delta = profile.delta_min;
  p.mincut_count = static_cast<int>(family.cuts.size());
  p.is_regular = profile.delta_min == profile.delta_max;
  p.regularity = p.is_regular ? profile.delta_min : -1;
  p.is_maximally_edge_connected = p.lambda == p.delta;
  p.is_super_lambda = p.is_maximally_edge_connected && all_cuts_trivial(g, family);
  const MincutGraph x = mincut_graph_of(family);
  p.mincut_graph_connected = x.graph.n() > 0 && is_connected(x.graph);
  p.is_self_dual = isomorphic(x.graph, g).isomorphic;
  return p;
}

struct LawVerdict {
  std::string law;
  std::vector<int> params;
  bool holds = false;
  std::vector<VertexId> witness;  // X(G) vertex -> predicted-graph vertex
  std::string detail;
};

namespace detail {

inline LawVerdict compare_sides(std::string law, std::vector<int> params, const MincutGraph& x,
                                const Graph& predicted) {
  LawVerdict v{std::move(law), std::move(params), false, {}, {}};
  const IsoResult iso = isomorphic(x.graph, predicted);
  if (iso.isomorphic && is_isomorphism(x.graph, predicted, *iso.mapping)) {
    v.holds = true;
    v.witness = *iso.mapping;
  }
  v.detail = "X has " + std::to_string(x.graph.n()) + " vertices/" +
             std::to_string(x.graph.m()) + " edges, predicted " + std::to_string(predicted.n()) +
             "/" + std::to_string(predicted.m());
  return v;
}

inline void require(bool ok, std::string_view law) {
  if (!ok) throw Error(ErrorCode::kBadParams, "parameters out of range for law '" + std::string(law) + "'");
}

}  // namespace detail

// Builds X(G) through mincut enumeration and the predicted graph through the
// family constructors, and checks them for isomorphism.
//
//   path n | star n | random_tree n seed      X = (n-1) K_1
//   complete_bipartite m n   (1 <= m < n)     X = n K_1
//   cycle n                                    X = L(K_n)
//   wheel n   (n >= 5; n = 4 gives K_4)        X = C_{n-1}
//   complete n | balanced_bipartite n | line_complete n   (n >= 3)   X = G
//   petersen                                   X = G
//   cartesian n  (n >= 3)                      X = vertex join of K_n x K_2,
//                                              join vertex = the matching cut
inline LawVerdict verify_family_law(std::string_view law, std::span<const int> params,
                                    const EnumerationLimits& limits = {}) {
  std::vector<int> p(params.begin(), params.end());
  auto arity = [&](std::size_t k) { detail::require(p.size() == k, law); };
  const std::string name(law);

  if (law == "path" || law == "star" || law == "random_tree") {
    arity(law == "random_tree" ? 2 : 1);
    detail::require(p[0] >= 2, law);
    const Graph t = family(law, p);
    return detail::compare_sides(name, p, build_mincut_graph(t, limits), families::empty(p[0] - 1));
  }
  if (law == "complete_bipartite") {
    arity(2);
    detail::require(p[0] >= 1 && p[0] < p[1], law);
    const Graph g = families::complete_bipartite(p[0], p[1]);
    return detail::compare_sides(name, p, build_mincut_graph(g, limits), families::empty(p[1]));
  }
  if (law == "cycle") {
    arity(1);
    detail::require(p[0] >= 3, law);
    return detail::compare_sides(name, p, build_mincut_graph(families::cycle(p[0]), limits),
                                 line_graph(families::complete(p[0])));
  }
  if (law == "wheel") {
    arity(1);
    detail::require(p[0] >= 4, law);
    const Graph predicted = p[0] == 4 ? families::complete(4) : families::cycle(p[0] - 1);
    return detail::compare_sides(name, p, build_mincut_graph(families::wheel(p[0]), limits),
                                 predicted);
  }
  if (law == "complete" || law == "balanced_bipartite" || law == "line_complete") {
    arity(1);
    detail::require(p[0] >= 3, law);
    Graph g = law == "complete"             ? families::complete(p[0])
              : law == "balanced_bipartite" ? families::complete_bipartite(p[0], p[0])
                                            : line_graph(families::complete(p[0]));
    return detail::compare_sides(name, p, build_mincut_graph(g, limits), g);
  }
  if (law == "petersen") {
    arity(0);
    const Graph g = families::petersen();
    return detail::compare_sides(name, p, build_mincut_graph(g, limits), g);
  }
  if (law == "cartesian") {
    arity(1);
    detail::require(p[0] >= 3, law);
    const Graph prism = cartesian_product_k2(families::complete(p[0]));
    const Graph predicted = vertex_join(prism);
    const MincutGraph x = build_mincut_graph(prism, limits);
    LawVerdict v = detail::compare_sides(name, p, x, predicted);
    if (v.holds) {
      // The vertex mapped onto the join apex must be the matching between copies.
      const auto apex = static_cast<VertexId>(
          std::find(v.witness.begin(), v.witness.end(), predicted.n() - 1) - v.witness.begin());
      Cut matching;
      for (EdgeId e = prism.m() - p[0]; e < prism.m(); ++e) matching.push_back(e);
      v.holds = x.labels[apex] == matching;
      v.detail += v.holds ? "; apex cut is the copy matching" : "; apex cut is not the matching";
    }
    return v;
  }
  throw Error(ErrorCode::kBadParams, "unknown law '" + name + "'");
}

// Laws stated for a given graph.
//   super_lambda: G r-regular, super-lambda, n >= 3   =>  X(G) = G
//   vdelta:       G super-lambda, n >= 3              =>  X(G) = G[V_delta]
inline LawVerdict verify_graph_law(std::string_view law, const Graph& g,
                                   const EnumerationLimits& limits = {}) {
  const std::string name(law);
  if (law != "super_lambda" && law != "vdelta") {
    throw Error(ErrorCode::kBadParams, "unknown graph law '" + name + "'");
  }
  detail::require(g.n() >= 3 && is_connected(g), law);
  const PropertyReport props = property_report(g, limits);
  if (!props.is_super_lambda || (law == "super_lambda" && !props.is_regular)) {
    throw Error(ErrorCode::kBadParams, "graph does not satisfy the hypotheses of '" + name + "'");
  }
  const MincutGraph x = build_mincut_graph(g, limits);
  if (law == "super_lambda") return detail::compare_sides(name, {g.n()}, x, g);
  const auto vd = degree_profile(g).v_delta;
  return detail::compare_sides(name, {g.n()}, x, induced_subgraph(g, vd));
}

// Two super-lambda graphs with isomorphic minimum-degree subgraphs have
// isomorphic mincut graphs, both equal to that subgraph.
inline LawVerdict verify_vdelta_pair(const Graph& g, const Graph& h,
                                     const EnumerationLimits& limits = {}) {
  detail::require(g.n() >= 3 && h.n() >= 3 && is_connected(g) && is_connected(h), "vdelta_pair");
  const Graph sub_g = induced_subgraph(g, degree_profile(g).v_delta);
  const Graph sub_h = induced_subgraph(h, degree_profile(h).v_delta);
  if (!property_report(g, limits).is_super_lambda || !property_report(h, limits).is_super_lambda ||
      !isomorphic(sub_g, sub_h).isomorphic) {
    throw Error(ErrorCode::kBadParams, "pair does not satisfy the hypotheses of 'vdelta_pair'");
  }
  const MincutGraph xg = build_mincut_graph(g, limits);
  const MincutGraph xh = build_mincut_graph(h, limits);
  LawVerdict v = detail::compare_sides("vdelta_pair", {g.n(), h.n()}, xg, xh.graph);
  if (v.holds) {
    const LawVerdict sub = detail::compare_sides("vdelta_pair", {}, xg, sub_g);
    v.holds = sub.holds;
    v.detail += v.holds ? "; both equal G[V_delta]" : "; X(G) differs from G[V_delta]";
  }
  return v;
}

// The default suite run by `verify-laws all`.
inline std::vector<LawVerdict> standard_law_suite(const EnumerationLimits& limits = {}) {
  std::vector<LawVerdict> out;
  auto run = [&](std::string_view law, std::vector<int> p) {
    out.push_back(verify_family_law(law, p, limits));
  };
  for (int n = 3; n <= 10; ++n) run("path", {n});
  for (int n = 3; n <= 10; ++n) run("star", {n});
  for (int seed = 0; seed < 20; ++seed) run("random_tree", {3 + seed % 8, seed});
  for (int n = 2; n <= 6; ++n)
    for (int m = 1; m < n; ++m) run("complete_bipartite", {m, n});
  for (int n = 3; n <= 8; ++n) run("cycle", {n});
  for (int n = 4; n <= 9; ++n) run("wheel", {n});
  for (int n = 3; n <= 5; ++n) run("complete", {n});
  for (int n = 3; n <= 5; ++n) run("balanced_bipartite", {n});
  for (int n = 3; n <= 5; ++n) run("line_complete", {n});
  run("petersen", {});
  for (int n = 3; n <= 5; ++n) run("cartesian", {n});
  out.push_back(verify_graph_law("super_lambda", families::petersen(), limits));
  for (const Graph& target : {families::paw(), families::star(4), families::path(4), families::cycle(4)}) {
    const SynthesisReport a = synthesize_host(target, {.limits = limits});
    out.push_back(verify_graph_law("vdelta", a.host, limits));
    const Graph b = build_host(target, a.target_degree + 1);
    out.push_back(verify_vdelta_pair(a.host, b, limits));
  }
  return out;
}

struct DualSearchResult {
  int max_n = 0;
  int graphs_checked = 0;
  std::vector<Graph> self_dual;
  std::vector<std::pair<Graph, Graph>> pairs;  // G != H, X(G) = H, X(H) = G
};

// Scans connected graphs on up to max_n vertices for mincut self-duals and
// dual pairs.
inline DualSearchResult search_mincut_duals(int max_n, const EnumerationLimits& limits = {}) {
  if (max_n > 7) throw Error(ErrorCode::kSizeLimitExceeded, "dual search is limited to n <= 7");
  DualSearchResult result;
  result.max_n = max_n;
  std::set<std::pair<std::string, std::string>> seen_pairs;
  for (const Graph& g : connected_graph_atlas(max_n)) {
    ++result.graphs_checked;
    const Graph x = build_mincut_graph(g, limits).graph;
    if (isomorphic(x, g).isomorphic) {
      result.self_dual.push_back(g);
      continue;
    }
    if (x.n() == 0) continue;
    const Graph xx = build_mincut_graph(x, limits).graph;
    if (!isomorphic(xx, g).isomorphic) continue;
    std::string a = canonical_certificate(g);
    std::string b = canonical_certificate(x);
    if (b < a) std::swap(a, b);
    if (seen_pairs.emplace(std::move(a), std::move(b)).second) result.pairs.emplace_back(g, x);
  }
  return result;
}

}  // namespace mcg

#endif  // MCG_LAWS_HPP
