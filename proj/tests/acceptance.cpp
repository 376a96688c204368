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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each check builds both sides independently and compares them.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mcg/atlas.hpp"
#include "mcg/intersection.hpp"
#include "mcg/laws.hpp"
#include "mcg/synthesis.hpp"

namespace {

using namespace mcg;

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) note << what;
    ok = ok && cond;
  }
};

bool iso(const Graph& a, const Graph& b) { return isomorphic(a, b).isomorphic; }

Graph x_of(const Graph& g) { return build_mincut_graph(g).graph; }

void family_laws(Outcome& o) {
  for (int seed = 0; seed < 20; ++seed) {
    const int n = 3 + seed % 8;
    const Graph x = x_of(families::random_tree(n, static_cast<std::uint64_t>(seed)));
    o.require(x.n() == n - 1 && x.m() == 0, "tree n=" + std::to_string(n));
  }
  for (int n = 2; n <= 6; ++n)
    for (int m = 1; m < n; ++m)
      o.require(iso(x_of(families::complete_bipartite(m, n)), families::empty(n)),
                "K_{" + std::to_string(m) + "," + std::to_string(n) + "}");
  for (int n = 3; n <= 8; ++n)
    o.require(iso(x_of(families::cycle(n)), line_graph(families::complete(n))), "C_" + std::to_string(n));
  for (int n = 5; n <= 9; ++n)
    o.require(iso(x_of(families::wheel(n)), families::cycle(n - 1)), "W_" + std::to_string(n));
}

void super_lambda_fixed_points(Outcome& o) {
  for (int n = 3; n <= 5; ++n) {
    for (const Graph& g : {families::complete(n), families::complete_bipartite(n, n),
                           line_graph(families::complete(n))}) {
      const PropertyReport p = property_report(g);
      o.require(p.is_regular && p.is_super_lambda, "hypotheses n=" + std::to_string(n));
      o.require(iso(x_of(g), g), "fixed point n=" + std::to_string(n));
    }
  }
  const Graph p = families::petersen();
  o.require(iso(x_of(p), p), "petersen");
}

void cartesian_law(Outcome& o) {
  for (int n = 3; n <= 5; ++n) {
    const LawVerdict v = verify_family_law("cartesian", std::vector<int>{n});
    o.require(v.holds, "cartesian n=" + std::to_string(n) + ": " + v.detail);
  }
  const Graph prism = cartesian_product_k2(families::complete(4));
  const MincutGraph x = build_mincut_graph(prism);
  std::set<Cut> stars;
  for (VertexId v = 0; v < prism.n(); ++v) stars.insert(star_of(prism, v));
  std::vector<Cut> extra;
  for (const Cut& c : x.labels)
    if (!stars.contains(c)) extra.push_back(c);
  o.require(extra.size() == 1, "exactly one non-star mincut");
  if (extra.size() == 1) {
    o.require(extra[0] == Cut{12, 13, 14, 15}, "extra cut is edges 12..15");
    for (EdgeId e : extra[0]) o.require(prism.edge(e).v == prism.edge(e).u + 4, "matching edge");
  }
}

void enumeration_oracle(Outcome& o) {
  int checked = 0;
  for (const Graph& g : connected_graph_atlas(8)) {
    const MincutFamily a = enumerate_mincuts(g);
    const MincutFamily b = brute_force_mincuts(g);
    ++checked;
    if (!(a == b)) {
      o.require(false, "mismatch on " + std::to_string(g.n()) + "/" + std::to_string(g.m()));
      return;
    }
    o.require(iso(mincut_graph_of(a).graph, mincut_graph_of(b).graph), "X mismatch");
  }
  o.require(checked == 12113, "atlas size " + std::to_string(checked));
  o.note << checked << " graphs";
}

void synthesis(Outcome& o) {
  int checked = 0;
  for (const Graph& g : connected_graph_atlas(6)) {
    const SynthesisReport r = synthesize_host(g, {.max_retries = 4});
    const Graph x = build_mincut_graph(r.host).graph;
    o.require(r.verified.isomorphic && is_isomorphism(x, g, *r.verified.mapping),
              "witness on " + std::to_string(g.n()) + "/" + std::to_string(g.m()));
    ++checked;
  }
  const Graph paw = families::paw();
  o.require(!iso(x_of(build_host(paw, 3)), paw), "paw t=3 must fail");
  o.require(iso(x_of(build_host(paw, 4)), paw), "paw t=4 must verify");
  const SynthesisReport r = synthesize_host(paw);
  o.require(r.failed_targets == std::vector<int>{3} && r.target_degree == 4, "paw report");
  if (o.ok) o.note << checked << " graphs";
}

void intersection_numbers(Outcome& o) {
  const Graph paw = families::paw();
  const IntersectionCertificate c = r_intersection_number(paw, 3, true);
  o.require(c.universe_size == 8, "i_3 = " + std::to_string(c.universe_size));
  o.require(iso(intersection_graph(c.subsets), paw), "certificate rebuilds paw");
  const std::vector<VertexId> identity = {0, 1, 2, 3};
  o.require(is_isomorphism(intersection_graph(c.subsets), paw, identity), "subset v represents vertex v");
  o.require(ix_upper_bound(paw, true) == 12, "bumped bound");
  o.require(ix_upper_bound(paw, false) == 8, "bound");
}

void operator_index(Outcome& o) {
  for (const Graph& t : connected_graph_atlas(8)) {
    if (t.n() < 3 || t.m() != t.n() - 1) continue;
    const OperatorTrace tr = operator_trace(t, 16);
    o.require(tr.kind == IndexKind::kFinite && tr.index == 2, "tree on " + std::to_string(t.n()));
  }
  for (int n = 3; n <= 5; ++n) {
    const OperatorTrace tr = operator_trace(families::complete(n), 16);
    o.require(tr.kind == IndexKind::kInfinite && tr.repeat_of == 0, "K_" + std::to_string(n));
  }
  // K_1 and K_2 have no proper fixed point: X(K_2) = K_1 and X(K_1) is null.
  o.require(operator_trace(families::complete(2), 16).index == 2, "K_2");
  o.require(operator_trace(families::complete(1), 16).index == 1, "K_1");
  const OperatorTrace w = operator_trace(families::wheel(6), 16);
  o.require(w.kind == IndexKind::kInfinite && w.sequence.size() == 4, "W_6 trace length");
  if (w.sequence.size() == 4) {
    o.require(iso(w.sequence[0], families::wheel(6)) && iso(w.sequence[1], families::cycle(5)) &&
                  iso(w.sequence[2], line_graph(families::complete(5))) && w.repeat_of == 2,
              "W_6 trace");
  }
}

std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string cmd = std::string(MCG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, {}};
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

void determinism(Outcome& o) {
  for (const std::string args : {"verify-laws", "analyze --family petersen", "analyze --family wheel,6",
                                 "analyze --family random_tree,9 --seed 4"}) {
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    o.require(a.first == 0 && !a.second.empty(), args + " failed");
    o.require(a == b, args + " differs");
  }
}

struct Criterion {
  int id;
  std::string name;
  double limit_s;  // 0 = no limit
  std::function<void(Outcome&)> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "family laws (trees, K_{m,n}, cycles, wheels)", 10, family_laws},
      {2, "super-lambda fixed points", 30, super_lambda_fixed_points},
      {3, "cartesian law and matching cut", 0, cartesian_law},
      {4, "enumeration equals brute force on all connected graphs n<=8", 0, enumeration_oracle},
      {5, "host synthesis for all connected graphs n<=6", 300, synthesis},
      {6, "constrained 3-intersection number of the paw", 60, intersection_numbers},
      {7, "operator index", 0, operator_index},
      {8, "byte-identical CLI output", 0, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.check(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      o.ok = false;
      o.note << " (over " << c.limit_s << " s)";
    }
    failures += o.ok ? 0 : 1;
    std::printf("%s [%d] %s  %.2fs  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                o.note.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
