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

#ifndef MCG_INTERSECTION_HPP
#define MCG_INTERSECTION_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "mcg/graph.hpp"
#include "mcg/iso.hpp"
#include "mcg/mincut.hpp"

namespace mcg {

// X(G): vertex i stands for the i-th cut of the canonical mincut family.
struct MincutGraph {
  Graph graph;
  std::vector<Cut> labels;
};

// Intersection graph of a family of sorted sets.
template <typename Set>
Graph intersection_graph(const std::vector<Set>& sets) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      auto a = sets[i].begin();
      auto b = sets[j].begin();
      bool meet = false;
      while (!meet && a != sets[i].end() && b != sets[j].end()) {
        if (*a == *b) meet = true;
        else if (*a < *b) ++a;
        else ++b;
      }
      if (meet) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return Graph(static_cast<int>(sets.size()), pairs);
}

inline MincutGraph mincut_graph_of(const MincutFamily& family) {
  return MincutGraph{intersection_graph(family.cuts), family.cuts};
}

inline MincutGraph build_mincut_graph(const Graph& g, const EnumerationLimits& limits = {}) {
  return mincut_graph_of(enumerate_mincuts(g, limits));
}

enum class IndexKind { kFinite, kInfinite, kIndeterminate };

inline std::string_view to_string(IndexKind k) {
  switch (k) {
    case IndexKind::kFinite: return "finite";
    case IndexKind::kInfinite: return "infinite";
    case IndexKind::kIndeterminate: return "indeterminate";
  }
  return "?";
}

struct OperatorTrace {
  std::vector<Graph> sequence;  // G, X(G), XX(G), ...
  IndexKind kind = IndexKind::kIndeterminate;
  int index = 0;  // meaningful when kind == kFinite
  // For kInfinite: the last iterate is isomorphic to sequence[repeat_of].
  int repeat_of = -1;
  int cap = 0;
  std::string cycle;
};

// Applies X until the null graph, a repeat of any earlier iterate (up to
// isomorphism), or `cap` applications.
inline OperatorTrace operator_trace(const Graph& g, int cap, const EnumerationLimits& limits = {},
                                    const IsoLimits& iso_limits = {}) {
  if (cap < 1) throw Error(ErrorCode::kBadParams, "cap must be >= 1");
  OperatorTrace trace;
  trace.cap = cap;
  trace.sequence.push_back(g);
  if (g.n() == 0) {
    trace.kind = IndexKind::kFinite;
    return trace;
  }
  for (int step = 1; step <= cap; ++step) {
    Graph next = build_mincut_graph(trace.sequence.back(), limits).graph;
    trace.sequence.push_back(next);
    if (next.n() == 0) {
      trace.kind = IndexKind::kFinite;
      trace.index = step;
      return trace;
    }
    for (int k = 0; k + 1 < static_cast<int>(trace.sequence.size()); ++k) {
      if (isomorphic(trace.sequence[k], next, iso_limits).isomorphic) {
        trace.kind = IndexKind::kInfinite;
        trace.repeat_of = k;
        const int period = step - k;
        trace.cycle = "iterate " + std::to_string(step) + " is isomorphic to iterate " +
                      std::to_string(k) +
                      (period == 1 ? " (fixed point)"
                                   : " (cycle of length " + std::to_string(period) + ")");
        return trace;
      }
    }
  }
  trace.kind = IndexKind::kIndeterminate;
  return trace;
}

}  // namespace mcg

#endif  // MCG_INTERSECTION_HPP
