// Copyright 2026 The Strucres Authors.
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

// Brute-force reference implementations. They share no code with the
// library algorithms and are only fit for small inputs.

#ifndef STRUCRES_TESTS_ORACLES_HPP
#define STRUCRES_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <set>
#include <vector>

#include "strucres/bipartite.hpp"
#include "strucres/structured_matrix.hpp"

namespace strucres::oracle {

inline constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();

struct Components {
  std::vector<std::vector<std::size_t>> comps;  // ordered by smallest state
  std::vector<bool> source;                     // no edge enters from outside
};

// reach[u][v]: v reachable from u; edge x_j -> x_i for each star (i, j).
inline std::vector<std::vector<bool>> closure(const StructuredMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) reach[v][v] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a.is_star(i, j)) reach[j][i] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t u = 0; u < n; ++u)
      if (reach[u][k])
        for (std::size_t v = 0; v < n; ++v)
          if (reach[k][v]) reach[u][v] = true;
  return reach;
}

inline Components components(const StructuredMatrix& a) {
  const std::size_t n = a.rows();
  const auto reach = closure(a);
  Components out;
  std::vector<bool> placed(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    if (placed[v]) continue;
    std::vector<std::size_t> c;
    for (std::size_t u = v; u < n; ++u)
      if (reach[v][u] && reach[u][v]) {
        c.push_back(u);
        placed[u] = true;
      }
    bool source = true;
    for (std::size_t i : c)
      for (std::size_t j = 0; j < n; ++j)
        if (a.is_star(i, j) && !(reach[j][v] && reach[v][j])) source = false;
    out.comps.push_back(c);
    out.source.push_back(source);
  }
  return out;
}

struct Bigraph {
  std::size_t right = 0;
  std::vector<std::vector<std::size_t>> adj;  // left -> right
};

inline Bigraph bigraph(const BipartiteView& view) {
  Bigraph g{view.right_count(), {}};
  for (std::size_t l = 0; l < view.left_count(); ++l) {
    const auto& nb = view.neighbors(l);
    g.adj.emplace_back(nb.begin(), nb.end());
  }
  return g;
}

// Left vertex j of B([A]) reaches right i iff (i, j) is a star.
inline Bigraph bigraph(const StructuredMatrix& a) {
  Bigraph g{a.rows(), std::vector<std::vector<std::size_t>>(a.cols())};
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (a.is_star(i, j)) g.adj[j].push_back(i);
  return g;
}

/// Every maximum matching, as the mate of each left vertex.
inline std::vector<std::vector<std::size_t>> maximum_matchings(const Bigraph& g) {
  std::vector<std::vector<std::size_t>> best;
  std::size_t best_size = 0;
  std::vector<std::size_t> mate(g.adj.size(), kFree);
  std::vector<bool> used(g.right, false);
  auto rec = [&](auto&& self, std::size_t l, std::size_t size) -> void {
    if (l == g.adj.size()) {
      if (size > best_size) {
        best_size = size;
        best.clear();
      }
      if (size == best_size) best.push_back(mate);
      return;
    }
    self(self, l + 1, size);
    for (std::size_t r : g.adj[l]) {
      if (used[r]) continue;
      used[r] = true;
      mate[l] = r;
      self(self, l + 1, size + 1);
      mate[l] = kFree;
      used[r] = false;
    }
  };
  rec(rec, 0, 0);
  return best;
}

inline std::size_t matching_size(const std::vector<std::size_t>& mate) {
  return static_cast<std::size_t>(
      std::count_if(mate.begin(), mate.end(), [](std::size_t r) { return r != kFree; }));
}

inline std::vector<std::size_t> unmatched_right(const std::vector<std::size_t>& mate,
                                                std::size_t right) {
  std::vector<bool> hit(right, false);
  for (std::size_t r : mate)
    if (r != kFree) hit[r] = true;
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < right; ++r)
    if (!hit[r]) out.push_back(r);
  return out;
}

inline bool saturable(const Bigraph& g, const std::vector<std::size_t>& targets) {
  for (const auto& mate : maximum_matchings(g)) {
    const auto free = unmatched_right(mate, g.right);
    bool ok = true;
    for (std::size_t t : targets)
      if (std::binary_search(free.begin(), free.end(), t)) ok = false;
    if (ok) return true;
  }
  return false;
}

/// Largest number of source components holding an unmatched vertex, over
/// all maximum matchings of B([A]).
inline std::size_t alpha(const StructuredMatrix& a) {
  const Components c = components(a);
  std::size_t best = 0;
  for (const auto& mate : maximum_matchings(bigraph(a))) {
    const auto free = unmatched_right(mate, a.rows());
    std::size_t count = 0;
    for (std::size_t k = 0; k < c.comps.size(); ++k) {
      if (!c.source[k]) continue;
      for (std::size_t s : c.comps[k])
        if (std::binary_search(free.begin(), free.end(), s)) {
          ++count;
          break;
        }
    }
    best = std::max(best, count);
  }
  return best;
}

/// Distinct representatives: each state in `rows` gets its own input column
/// with a star in b.
inline bool distinct_inputs(const StructuredMatrix& b,
                            const std::vector<std::size_t>& rows) {
  std::vector<bool> taken(b.cols(), false);
  auto rec = [&](auto&& self, std::size_t k) -> bool {
    if (k == rows.size()) return true;
    for (std::size_t c = 0; c < b.cols(); ++c) {
      if (taken[c] || !b.is_star(rows[k], c)) continue;
      taken[c] = true;
      if (self(self, k + 1)) return true;
      taken[c] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

/// Controllability read off the unmatched-vertex criterion: some maximum
/// matching of B([A]) leaves only vertices that can take distinct inputs,
/// and every source component has a state with an input.
inline bool unmatched_criterion(const StructuredMatrix& a,
                                const StructuredMatrix& b) {
  const Components c = components(a);
  for (std::size_t k = 0; k < c.comps.size(); ++k) {
    if (!c.source[k]) continue;
    bool fed = false;
    for (std::size_t s : c.comps[k])
      for (std::size_t col = 0; col < b.cols(); ++col)
        if (b.is_star(s, col)) fed = true;
    if (!fed) return false;
  }
  for (const auto& mate : maximum_matchings(bigraph(a)))
    if (distinct_inputs(b, unmatched_right(mate, a.rows()))) return true;
  return false;
}

}  // namespace strucres::oracle

#endif  // STRUCRES_TESTS_ORACLES_HPP
