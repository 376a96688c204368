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

// mcg: minimum edge-cut and mincut-graph analysis from the command line.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mcg/atlas.hpp"
#include "mcg/graph.hpp"
#include "mcg/intersection.hpp"
#include "mcg/io.hpp"
#include "mcg/laws.hpp"
#include "mcg/report.hpp"
#include "mcg/synthesis.hpp"

namespace {

using mcg::report::json;

enum ExitCode {
  kOk = 0,
  kOther = 1,
  kParse = 2,
  kSizeLimit = 3,
  kRetries = 4,
  kLawViolation = 5,
  kNotFound = 6,
  kDisconnected = 7,
};

int exit_code_for(mcg::ErrorCode code) {
  switch (code) {
    case mcg::ErrorCode::kSelfLoop:
    case mcg::ErrorCode::kDuplicateEdge:
    case mcg::ErrorCode::kVertexOutOfRange:
    case mcg::ErrorCode::kParseError:
    case mcg::ErrorCode::kBadParams:
    case mcg::ErrorCode::kBadEdgeId:
    case mcg::ErrorCode::kBadVertexSet:
      return kParse;
    case mcg::ErrorCode::kSizeLimitExceeded: return kSizeLimit;
    case mcg::ErrorCode::kRetriesExhausted: return kRetries;
    case mcg::ErrorCode::kNotFoundWithinBound: return kNotFound;
    case mcg::ErrorCode::kDisconnected: return kDisconnected;
  }
  return kOther;
}

struct RunConfig {
  std::string input_path;
  std::string family_spec;
  std::string format = "json";
  int max_n = 24;
  std::uint64_t max_subsets = 5'000'000;
  int cap = 16;
  std::optional<std::int64_t> seed;

  mcg::EnumerationLimits limits() const {
    mcg::EnumerationLimits l;
    l.max_n = max_n;
    l.max_subsets = max_subsets;
    return l;
  }
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw mcg::Error(mcg::ErrorCode::kParseError, "not an integer: '" + item + "'");
    }
  }
  return out;
}

// "NAME,P1,P2,..."; random_tree takes its seed from --seed when omitted.
mcg::Graph graph_from_family(const std::string& spec, const std::optional<std::int64_t>& seed) {
  const auto comma = spec.find(',');
  const std::string name = spec.substr(0, comma);
  std::vector<int> params;
  if (comma != std::string::npos) params = parse_int_list(spec.substr(comma + 1));
  if (name == "random_tree" && params.size() == 1) params.push_back(static_cast<int>(seed.value_or(0)));
  try {
    return mcg::family(name, params);
  } catch (const mcg::Error& e) {
    throw mcg::Error(mcg::ErrorCode::kParseError, e.what());
  }
}

mcg::Graph load_input(const RunConfig& cfg) {
  const bool has_path = !cfg.input_path.empty();
  const bool has_family = !cfg.family_spec.empty();
  if (has_path == has_family) {
    throw mcg::Error(mcg::ErrorCode::kParseError, "give exactly one of INPUT or --family");
  }
  if (has_family) return graph_from_family(cfg.family_spec, cfg.seed);
  std::string text;
  if (cfg.input_path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(cfg.input_path);
    if (!in) throw mcg::Error(mcg::ErrorCode::kParseError, "cannot open " + cfg.input_path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return mcg::io::parse_graph(text);
}

// Prints `doc` as JSON, a flat text rendering, or the DOT of `dot_graph`.
void emit(const RunConfig& cfg, const json& doc, const std::vector<mcg::Graph>& dot_graphs) {
  if (cfg.format == "dot") {
    for (std::size_t i = 0; i < dot_graphs.size(); ++i) {
      std::cout << mcg::io::to_dot(dot_graphs[i], "G" + std::to_string(i));
    }
    return;
  }
  if (cfg.format == "text") {
    for (const auto& [key, value] : doc.items()) {
      std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                << "\n";
    }
    return;
  }
  std::cout << doc.dump(2) << "\n";
}

void add_input_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("input", cfg.input_path, "Edge-list or JSON graph file ('-' for stdin)");
  sub->add_option("--family", cfg.family_spec, "Named family, e.g. wheel,6 or complete_bipartite,2,3");
  sub->add_option("--seed", cfg.seed, "Seed for random_tree when not given in --family");
}

void add_common_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  sub->add_option("--max-n", cfg.max_n, "Largest graph the mincut sweep accepts")
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-subsets", cfg.max_subsets, "Brute-force subset budget")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum edge-cuts, mincut graphs and related constructions"};
  app.require_subcommand(1);
  RunConfig cfg;
  int exit_status = kOk;

  auto* analyze = app.add_subcommand("analyze", "Degree profile, mincuts, properties and X(G)");
  add_input_options(analyze, cfg);
  add_common_options(analyze, cfg);
  analyze->callback([&] {
    const mcg::Graph g = load_input(cfg);
    emit(cfg, mcg::report::analyze(g, cfg.limits()), {g});
  });

  bool brute_force = false;
  auto* mincuts = app.add_subcommand("mincuts", "Edge connectivity and the minimum edge-cuts");
  add_input_options(mincuts, cfg);
  add_common_options(mincuts, cfg);
  mincuts->add_flag("--brute-force", brute_force, "Use the edge-subset oracle instead of the sweep");
  mincuts->callback([&] {
    const mcg::Graph g = load_input(cfg);
    const mcg::MincutFamily f =
        brute_force ? mcg::brute_force_mincuts(g, cfg.limits()) : mcg::enumerate_mincuts(g, cfg.limits());
    emit(cfg, mcg::report::mincut_family_json(f), {g});
  });

  auto* xgraph = app.add_subcommand("mincut-graph", "The mincut graph X(G) with cut labels");
  add_input_options(xgraph, cfg);
  add_common_options(xgraph, cfg);
  xgraph->callback([&] {
    const mcg::Graph g = load_input(cfg);
    const mcg::MincutGraph x = mcg::build_mincut_graph(g, cfg.limits());
    emit(cfg, mcg::report::mincut_graph_json(x), {x.graph});
  });

  auto* iterate = app.add_subcommand("iterate", "Repeated application of X and its index");
  add_input_options(iterate, cfg);
  add_common_options(iterate, cfg);
  iterate->add_option("--cap", cfg.cap, "Maximum number of applications")->check(CLI::PositiveNumber);
  iterate->callback([&] {
    const mcg::Graph g = load_input(cfg);
    const mcg::OperatorTrace t = mcg::operator_trace(g, cfg.cap, cfg.limits());
    emit(cfg, mcg::report::operator_trace_json(t), t.sequence);
  });

  int max_retries = 4;
  auto* synth = app.add_subcommand("synthesize", "Build a host H with X(H) isomorphic to G");
  add_input_options(synth, cfg);
  add_common_options(synth, cfg);
  synth->add_option("--max-retries", max_retries, "Target-degree bumps allowed")
      ->check(CLI::PositiveNumber);
  synth->callback([&] {
    const mcg::Graph g = load_input(cfg);
    mcg::SynthesisOptions opts;
    opts.max_retries = max_retries;
    opts.limits = cfg.limits();
    const mcg::SynthesisReport r = mcg::synthesize_host(g, opts);
    json doc = mcg::report::synthesis_json(r);
    doc["ix_upper_bound"] = mcg::ix_upper_bound(g, false);
    doc["ix_upper_bound_bumped"] = mcg::ix_upper_bound(g, true);
    emit(cfg, doc, {r.host});
  });

  std::string law = "all";
  std::string law_params;
  auto* laws = app.add_subcommand("verify-laws", "Check the closed-form mincut-graph laws");
  laws->add_option("law", law, "Law id, or 'all' for the default suite");
  laws->add_option("--params", law_params, "Comma-separated law parameters");
  add_input_options(laws, cfg);
  add_common_options(laws, cfg);
  laws->callback([&] {
    std::vector<mcg::LawVerdict> verdicts;
    if (law == "all") {
      verdicts = mcg::standard_law_suite(cfg.limits());
    } else if (law == "super_lambda" || law == "vdelta") {
      verdicts.push_back(mcg::verify_graph_law(law, load_input(cfg), cfg.limits()));
    } else {
      const auto params = law_params.empty() ? std::vector<int>{} : parse_int_list(law_params);
      verdicts.push_back(mcg::verify_family_law(law, params, cfg.limits()));
    }
    json doc;
    auto rows = json::array();
    bool all_hold = true;
    for (const auto& v : verdicts) {
      rows.push_back(mcg::report::law_json(v));
      all_hold = all_hold && v.holds;
    }
    doc["laws"] = std::move(rows);
    doc["all_hold"] = all_hold;
    if (cfg.format == "text") {
      for (const auto& v : verdicts) {
        std::cout << (v.holds ? "PASS " : "FAIL ") << v.law;
        for (int p : v.params) std::cout << " " << p;
        std::cout << "  witness=" << v.witness.size() << "  " << v.detail << "\n";
      }
    } else {
      emit(cfg, doc, {});
    }
    if (!all_hold) exit_status = kLawViolation;
  });

  int r = 0;
  bool constrained = false;
  int max_universe = 16;
  auto* inum = app.add_subcommand("intersection-number", "Exact r-intersection number by search");
  add_input_options(inum, cfg);
  add_common_options(inum, cfg);
  inum->add_option("--r", r, "Subset size")->required()->check(CLI::PositiveNumber);
  inum->add_flag("--constrained", constrained, "Mincut-style constraints on the family");
  inum->add_option("--max-universe", max_universe, "Largest universe tried")->check(CLI::Range(1, 64));
  inum->callback([&] {
    const mcg::Graph g = load_input(cfg);
    mcg::IntersectionSearchLimits limits;
    limits.max_universe = max_universe;
    const auto cert = mcg::r_intersection_number(g, r, constrained, limits);
    emit(cfg, mcg::report::certificate_json(cert), {mcg::intersection_graph(cert.subsets)});
  });

  int atlas_n = 7;
  auto* atlas = app.add_subcommand("atlas", "Connected graphs up to isomorphism");
  atlas->add_option("--max-n", atlas_n, "Largest vertex count")->check(CLI::Range(1, mcg::kAtlasMaxN));
  atlas->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  atlas->callback([&] {
    const auto graphs = mcg::connected_graph_atlas(atlas_n);
    json doc;
    doc["max_n"] = atlas_n;
    doc["count"] = graphs.size();
    auto list = json::array();
    for (const auto& g : graphs) list.push_back(mcg::report::graph_summary(g));
    doc["graphs"] = std::move(list);
    emit(cfg, doc, graphs);
  });

  int dual_n = 5;
  auto* duals = app.add_subcommand("dual-search", "Mincut self-duals and dual pairs");
  duals->add_option("--max-n", dual_n, "Largest vertex count")->check(CLI::Range(1, 7));
  duals->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  duals->callback([&] {
    const auto result = mcg::search_mincut_duals(dual_n);
    emit(cfg, mcg::report::dual_search_json(result), result.self_dual);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParse;
  } catch (const mcg::Error& e) {
    std::cerr << "mcg: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "mcg: " << e.what() << "\n";
    return kOther;
  }
  return exit_status;
}
