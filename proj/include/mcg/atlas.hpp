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

#ifndef MCG_ATLAS_HPP
#define MCG_ATLAS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mcg/error.hpp"
#include "mcg/graph.hpp"
#include "mcg/iso.hpp"

namespace mcg {

inline constexpr int kAtlasMaxN = 8;

// One representative per isomorphism class of connected graphs on 1..max_n
// vertices, in canonical form, ordered by (n, certificate).
//
// Every connected graph on k+1 vertices has a non-cut vertex, so extending
// each connected k-vertex class by a vertex with a non-empty neighbourhood
// reaches every class; duplicates are removed by certificate.
inline std::vector<Graph> connected_graph_atlas(int max_n) {
  if (max_n > kAtlasMaxN) {
    throw Error(ErrorCode::kSizeLimitExceeded,
                "atlas above n=" + std::to_string(kAtlasMaxN) + " requested");
  }
  std::vector<Graph> out;
  if (max_n < 1) return out;
  std::vector<Graph> level{families::empty(1)};
  out.push_back(level.front());
  for (int n = 2; n <= max_n; ++n) {
    std::map<std::string, Graph> classes;
    for (const Graph& base : level) {
      const int k = n - 1;
      for (std::uint32_t nb = 1; nb < (std::uint32_t{1} << k); ++nb) {
        auto pairs = base.pairs();
        for (int v = 0; v < k; ++v) {
          if ((nb >> v) & 1) pairs.emplace_back(v, k);
        }
        Graph g(n, pairs);
        std::string cert = canonical_certificate(g);
        if (!classes.contains(cert)) classes.emplace(std::move(cert), canonical_form(g));
      }
    }
    level.clear();
    for (auto& [cert, g] : classes) level.push_back(std::move(g));
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace mcg

#endif  // MCG_ATLAS_HPP
