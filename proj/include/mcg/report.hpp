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

// JSON shapes emitted by the command-line tool. Keys keep insertion order so
// equal inputs give byte-identical output.

#ifndef MCG_REPORT_HPP
#define MCG_REPORT_HPP

#include <nlohmann/json.hpp>

#include "mcg/graph.hpp"
#include "mcg/intersection.hpp"
#include "mcg/io.hpp"
#include "mcg/laws.hpp"
#include "mcg/mincut.hpp"
#include "mcg/synthesis.hpp"

namespace mcg::report {

using json = nlohmann::ordered_json;

inline json graph_summary(const Graph& g) {
  json j;
  j["n"] = g.n();
  j["m"] = g.m();
  auto edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  return j;
}

inline json degree_profile_json(const DegreeProfile& p) {
  json j;
  j["degrees"] = p.degrees;
  j["delta_min"] = p.delta_min;
  j["delta_max"] = p.delta_max;
  j["v_delta"] = p.v_delta;
  return j;
}

inline json mincut_family_json(const MincutFamily& f) {
  json j;
  j["lambda"] = f.lambda;
  j["mincuts"] = f.cuts;
  return j;
}

inline json mincut_graph_json(const MincutGraph& x) {
  json j = graph_summary(x.graph);
  j["labels"] = x.labels;
  return j;
}

inline json property_json(const PropertyReport& p) {
  json j;
  j["is_regular"] = p.is_regular;
  j["regularity"] = p.is_regular ? json(p.regularity) : json(nullptr);
  j["is_maximally_edge_connected"] = p.is_maximally_edge_connected;
  j["is_super_lambda"] = p.is_super_lambda;
  j["is_self_dual"] = p.is_self_dual;
  j["mincut_graph_connected"] = p.mincut_graph_connected;
  j["lambda"] = p.lambda;
  j["delta"] = p.delta;
  return j;
}

inline json analyze(const Graph& g, const EnumerationLimits& limits) {
  json j;
  j["n"] = g.n();
  j["m"] = g.m();
  j["edges"] = graph_summary(g)["edges"];
  j["degree_profile"] = degree_profile_json(degree_profile(g));
  j["connected"] = is_connected(g);
  const MincutFamily family = enumerate_mincuts(g, limits);
  j["lambda"] = family.lambda;
  j["mincuts"] = family.cuts;
  j["properties"] = is_connected(g) ? property_json(property_report(g, limits)) : json(nullptr);
  const MincutGraph x = mincut_graph_of(family);
  json xs = graph_summary(x.graph);
  xs["connected"] = x.graph.n() > 0 && is_connected(x.graph);
  j["mincut_graph"] = std::move(xs);
  return j;
}

inline json operator_trace_json(const OperatorTrace& t) {
  json j;
  auto it = json::array();
  for (const Graph& g : t.sequence) it.push_back(graph_summary(g));
  j["iterates"] = std::move(it);
  switch (t.kind) {
    case IndexKind::kFinite: j["index"] = t.index; break;
    case IndexKind::kInfinite: j["index"] = "infinite"; break;
    case IndexKind::kIndeterminate: j["index"] = "indeterminate"; break;
  }
  j["cap"] = t.cap;
  j["cycle"] = t.kind == IndexKind::kInfinite ? json(t.cycle) : json(nullptr);
  return j;
}

inline json synthesis_json(const SynthesisReport& r) {
  json j;
  j["host"] = graph_summary(r.host);
  j["embedded_vertices"] = r.embedded_vertices;
  j["target_degree"] = r.target_degree;
  j["clique_size"] = r.clique_size;
  j["retries"] = r.retries;
  j["failed_targets"] = r.failed_targets;
  j["verified"] = r.verified.isomorphic;
  j["witness"] = r.verified.mapping ? json(*r.verified.mapping) : json(nullptr);
  return j;
}

inline json certificate_json(const IntersectionCertificate& c) {
  json j;
  j["universe_size"] = c.universe_size;
  j["r"] = c.r;
  j["constrained"] = c.constrained;
  j["subsets"] = c.subsets;
  return j;
}

inline json law_json(const LawVerdict& v) {
  json j;
  j["law"] = v.law;
  j["params"] = v.params;
  j["verdict"] = v.holds;
  j["witness_size"] = v.witness.size();
  j["witness"] = v.witness;
  j["detail"] = v.detail;
  return j;
}

inline json dual_search_json(const DualSearchResult& r) {
  json j;
  j["max_n"] = r.max_n;
  j["graphs_checked"] = r.graphs_checked;
  auto self = json::array();
  for (const Graph& g : r.self_dual) self.push_back(graph_summary(g));
  j["self_dual"] = std::move(self);
  auto pairs = json::array();
  for (const auto& [g, h] : r.pairs) pairs.push_back({graph_summary(g), graph_summary(h)});
  j["pairs"] = std::move(pairs);
  return j;
}

}  // namespace mcg::report

#endif  // MCG_REPORT_HPP
