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

#ifndef MCG_ISO_HPP
#define MCG_ISO_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcg/error.hpp"
#include "mcg/graph.hpp"

namespace mcg {

struct IsoLimits {
  int max_n = 64;
  std::uint64_t max_nodes = 50'000'000;  // search-tree nodes
};

struct IsoResult {
  bool isomorphic = false;
  // mapping[v] = image in the second graph of vertex v of the first.
  std::optional<std::vector<VertexId>> mapping;
};

// True when mapping is a bijection carrying edges onto edges and non-edges
// onto non-edges.
inline bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<VertexId>& mapping) {
  if (g.n() != h.n() || g.m() != h.m() || mapping.size() != static_cast<std::size_t>(g.n())) {
    return false;
  }
  std::vector<char> hit(static_cast<std::size_t>(h.n()), 0);
  for (VertexId x : mapping) {
    if (x < 0 || x >= h.n() || hit[x]) return false;
    hit[x] = 1;
  }
  const auto adj_h = h.adjacency_matrix();
  const auto n = static_cast<std::size_t>(h.n());
  for (const auto& e : g.edges()) {
    if (!adj_h[mapping[e.u] * n + mapping[e.v]]) return false;
  }
  // Equal edge counts plus an injective edge map cover the non-edges.
  return true;
}

namespace detail {

// Joint colour refinement over both graphs so colours are comparable.
// Returns false when the colour histograms diverge.
inline bool refine_colors(const Graph& g, const Graph& h, std::vector<int>& cg,
                          std::vector<int>& ch) {
  cg.assign(static_cast<std::size_t>(g.n()), 0);
  ch.assign(static_cast<std::size_t>(h.n()), 0);
  for (VertexId v = 0; v < g.n(); ++v) cg[v] = g.degree(v);
  for (VertexId v = 0; v < h.n(); ++v) ch[v] = h.degree(v);
  std::size_t classes = 0;
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> palette;
    auto signature = [](const Graph& x, const std::vector<int>& c, VertexId v) {
      std::vector<int> nb;
      nb.reserve(x.neighbors(v).size());
      for (VertexId w : x.neighbors(v)) nb.push_back(c[w]);
      std::sort(nb.begin(), nb.end());
      return std::make_pair(c[v], std::move(nb));
    };
    std::vector<std::pair<int, std::vector<int>>> sg, sh;
    for (VertexId v = 0; v < g.n(); ++v) sg.push_back(signature(g, cg, v));
    for (VertexId v = 0; v < h.n(); ++v) sh.push_back(signature(h, ch, v));
    for (const auto& s : sg) palette.emplace(s, 0);
    for (const auto& s : sh) palette.emplace(s, 0);
    int next = 0;
    for (auto& [key, id] : palette) id = next++;
    std::vector<int> hist_g(palette.size(), 0), hist_h(palette.size(), 0);
    for (VertexId v = 0; v < g.n(); ++v) ++hist_g[cg[v] = palette.at(sg[v])];
    for (VertexId v = 0; v < h.n(); ++v) ++hist_h[ch[v] = palette.at(sh[v])];
    if (hist_g != hist_h) return false;
    if (palette.size() == classes) return true;
    classes = palette.size();
  }
}

}  // namespace detail

// Exact isomorphism test: colour refinement, then backtracking over
// same-colour candidates in lowest-ID-first order.
inline IsoResult isomorphic(const Graph& g, const Graph& h, const IsoLimits& limits = {}) {
  if (g.n() > limits.max_n || h.n() > limits.max_n) {
    throw Error(ErrorCode::kSizeLimitExceeded, "isomorphism test over n=" + std::to_string(g.n()));
  }
  IsoResult result;
  if (g.n() != h.n() || g.m() != h.m()) return result;
  std::vector<int> cg, ch;
  if (!detail::refine_colors(g, h, cg, ch)) return result;

  const int n = g.n();
  const auto un = static_cast<std::size_t>(n);
  const auto adj_g = g.adjacency_matrix();
  const auto adj_h = h.adjacency_matrix();

  // Match order: rarest colour first, then grow along already-ordered
  // neighbours so adjacency checks prune early.
  std::map<int, int> freq;
  for (int c : cg) ++freq[c];
  std::vector<VertexId> order;
  std::vector<char> placed(un, 0);
  while (static_cast<int>(order.size()) < n) {
    VertexId pick = -1;
    int pick_links = -1;
    for (VertexId v = 0; v < n; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (VertexId w : g.neighbors(v)) links += placed[w];
      if (pick == -1 || links > pick_links ||
          (links == pick_links && freq[cg[v]] < freq[cg[pick]])) {
        pick = v;
        pick_links = links;
      }
    }
    placed[pick] = 1;
    order.push_back(pick);
  }

  std::vector<VertexId> map_g(un, -1);
  std::vector<char> used_h(un, 0);
  std::uint64_t nodes = 0;
  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == un) return true;
    if (++nodes > limits.max_nodes) {
      throw Error(ErrorCode::kSizeLimitExceeded, "isomorphism search budget exhausted");
    }
    const VertexId v = order[depth];
    for (VertexId w = 0; w < n; ++w) {
      if (used_h[w] || ch[w] != cg[v]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const VertexId u = order[k];
        ok = adj_g[v * un + u] == adj_h[w * un + map_g[u]];
      }
      if (!ok) continue;
      map_g[v] = w;
      used_h[w] = 1;
      if (self(self, depth + 1)) return true;
      used_h[w] = 0;
      map_g[v] = -1;
    }
    return false;
  };
  if (extend(extend, 0)) {
    result.isomorphic = true;
    result.mapping = std::move(map_g);
  }
  return result;
}

namespace detail {

// Individualisation-refinement canonical labelling. The canonical form is the
// lexicographically smallest upper-triangle adjacency string over all leaves
// of the search tree; automorphisms found at leaves prune by orbits.
class Canonizer {
 public:
  Canonizer(const Graph& g, const IsoLimits& limits)
      : n_(g.n()), adj_(g.adjacency_matrix()), limits_(limits) {}

  std::string run() {
    std::vector<std::vector<VertexId>> cells;
    if (n_ > 0) {
      cells.emplace_back(static_cast<std::size_t>(n_));
      std::iota(cells[0].begin(), cells[0].end(), 0);
    }
    std::vector<VertexId> prefix;
    search(std::move(cells), prefix);
    std::string cert;
    cert.push_back(static_cast<char>(n_ & 0xff));
    cert.push_back(static_cast<char>((n_ >> 8) & 0xff));
    cert += best_;
    return cert;
  }

  const std::vector<VertexId>& best_order() const { return best_order_; }

 private:
  bool adjacent(VertexId a, VertexId b) const {
    return adj_[static_cast<std::size_t>(a) * n_ + b] != 0;
  }

  // Splits cells until every vertex in a cell sees the same number of
  // neighbours in every cell. Split order depends only on counts.
  void refine(std::vector<std::vector<VertexId>>& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
        for (std::size_t c = 0; c < cells.size() && !changed; ++c) {
          if (cells[c].size() < 2) continue;
          std::vector<std::pair<int, VertexId>> keyed;
          for (VertexId v : cells[c]) {
            int count = 0;
            for (VertexId w : cells[s]) count += adjacent(v, w);
            keyed.emplace_back(count, v);
          }
          std::sort(keyed.begin(), keyed.end());
          if (keyed.front().first == keyed.back().first) continue;
          std::vector<std::vector<VertexId>> parts;
          for (std::size_t i = 0; i < keyed.size(); ++i) {
            if (i == 0 || keyed[i].first != keyed[i - 1].first) parts.emplace_back();
            parts.back().push_back(keyed[i].second);
          }
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), parts.begin(), parts.end());
          changed = true;
        }
      }
    }
  }

  std::string leaf_string(const std::vector<VertexId>& order) const {
    std::string bits;
    bits.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 16 + 1);
    unsigned char acc = 0;
    int filled = 0;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        acc = static_cast<unsigned char>((acc << 1) | (adjacent(order[i], order[j]) ? 1 : 0));
        if (++filled == 8) {
          bits.push_back(static_cast<char>(acc));
          acc = 0;
          filled = 0;
        }
      }
    }
    if (filled) bits.push_back(static_cast<char>(acc << (8 - filled)));
    return bits;
  }

  void add_automorphism(const std::vector<VertexId>& from, const std::vector<VertexId>& to) {
    std::vector<VertexId> gamma(static_cast<std::size_t>(n_));
    for (int p = 0; p < n_; ++p) gamma[from[p]] = to[p];
    automorphisms_.push_back(std::move(gamma));
  }

  // Returns the tree level to unwind to, or -1 to continue normally.
  int search(std::vector<std::vector<VertexId>> cells, std::vector<VertexId>& prefix) {
    if (++nodes_ > limits_.max_nodes) {
      throw Error(ErrorCode::kSizeLimitExceeded, "canonical labelling budget exhausted");
    }
    refine(cells);
    const int level = static_cast<int>(prefix.size());
    if (static_cast<int>(cells.size()) == n_) {
      std::vector<VertexId> order;
      order.reserve(cells.size());
      for (const auto& c : cells) order.push_back(c[0]);
      std::string s = leaf_string(order);
      if (!have_first_) {
        have_first_ = true;
        first_path_ = prefix;
        first_order_ = order;
        first_ = s;
        best_ = std::move(s);
        best_order_ = std::move(order);
        return -1;
      }
      if (s == first_) {
        add_automorphism(first_order_, order);
        // Jump back to the deepest first-path ancestor.
        int common = 0;
        while (common < level && common < static_cast<int>(first_path_.size()) &&
               prefix[common] == first_path_[common]) {
          ++common;
        }
        return common;
      }
      if (s == best_) {
        add_automorphism(best_order_, order);
      } else if (s < best_) {
        best_ = std::move(s);
        best_order_ = std::move(order);
      }
      return -1;
    }
    if (n_ == 0) return -1;

    std::size_t target = 0;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > 1 &&
          (cells[target].size() == 1 || cells[c].size() < cells[target].size())) {
        target = c;
      }
    }
    std::vector<VertexId> tried;
    const std::vector<VertexId> candidates = cells[target];
    for (VertexId w : candidates) {
      if (pruned_by_orbit(prefix, tried, w)) continue;
      tried.push_back(w);
      auto next = cells;
      auto& cell = next[target];
      cell.erase(std::find(cell.begin(), cell.end(), w));
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(target), std::vector<VertexId>{w});
      prefix.push_back(w);
      const int jump = search(std::move(next), prefix);
      prefix.pop_back();
      if (jump != -1 && jump < level) return jump;
    }
    return -1;
  }

  // w is skipped when an automorphism fixing the prefix pointwise carries an
  // already explored sibling onto it.
  bool pruned_by_orbit(const std::vector<VertexId>& prefix, const std::vector<VertexId>& tried,
                       VertexId w) const {
    if (tried.empty() || automorphisms_.empty()) return false;
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(),
                               [&](VertexId p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) parent[find(v)] = find(gamma[v]);
    }
    const int root = find(w);
    return std::any_of(tried.begin(), tried.end(), [&](VertexId t) { return find(t) == root; });
  }

  int n_;
  std::vector<std::uint8_t> adj_;
  IsoLimits limits_;
  std::uint64_t nodes_ = 0;
  bool have_first_ = false;
  std::vector<VertexId> first_path_;
  std::vector<VertexId> first_order_;
  std::string first_;
  std::string best_;
  std::vector<VertexId> best_order_;
  std::vector<std::vector<VertexId>> automorphisms_;
};

}  // namespace detail

// Byte string equal for two graphs exactly when they are isomorphic.
inline std::string canonical_certificate(const Graph& g, const IsoLimits& limits = {}) {
  if (g.n() > limits.max_n) {
    throw Error(ErrorCode::kSizeLimitExceeded, "certificate over n=" + std::to_string(g.n()));
  }
  return detail::Canonizer(g, limits).run();
}

// The graph relabelled into canonical order.
inline Graph canonical_form(const Graph& g, const IsoLimits& limits = {}) {
  detail::Canonizer c(g, limits);
  c.run();
  std::vector<VertexId> perm(static_cast<std::size_t>(g.n()));
  const auto& order = c.best_order();
  for (int p = 0; p < g.n(); ++p) perm[order[p]] = p;
  return relabel(g, perm);
}

}  // namespace mcg

#endif  // MCG_ISO_HPP
