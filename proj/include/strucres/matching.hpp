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

#ifndef STRUCRES_MATCHING_HPP
#define STRUCRES_MATCHING_HPP

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "strucres/bipartite.hpp"

namespace strucres {

inline constexpr std::size_t kUnmatched =
    std::numeric_limits<std::size_t>::max();

/// A set of left -> right edges sharing no endpoint.
class Matching {
 public:
  Matching() = default;
  Matching(std::size_t left_count, std::size_t right_count);

  /// Throws std::logic_error if either endpoint is already matched.
  void add(std::size_t left, std::size_t right);
  void remove_left(std::size_t left);

  std::size_t size() const { return size_; }
  std::size_t left_count() const { return left_mate_.size(); }
  std::size_t right_count() const { return right_mate_.size(); }

  std::size_t mate_of_left(std::size_t left) const { return left_mate_[left]; }
  std::size_t mate_of_right(std::size_t right) const {
    return right_mate_[right];
  }
  bool left_matched(std::size_t left) const {
    return left_mate_[left] != kUnmatched;
  }
  bool right_matched(std::size_t right) const {
    return right_mate_[right] != kUnmatched;
  }

  /// (left, right) pairs ordered by left.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::vector<std::size_t> right_unmatched() const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::size_t> left_mate_;
  std::vector<std::size_t> right_mate_;
};

/// True when m is a matching of `view` (sizes agree, every edge exists).
bool is_matching_of(const BipartiteView& view, const Matching& m);

/// Hopcroft-Karp. Vertices and neighbours are scanned in ascending order, so
/// the result is a deterministic function of the view.
Matching maximum_matching(const BipartiteView& view);

/// Hopcroft-Karp started from `initial`. Rights that `initial` covers stay
/// covered; left vertices too.
Matching maximum_matching(const BipartiteView& view, Matching initial);

/// A maximum matching that covers as many of the `priority` right vertices
/// as any maximum matching can.
Matching prioritized_maximum_matching(const BipartiteView& view,
                                      const std::vector<bool>& priority);

/// A maximum matching in which every right vertex of `targets` is matched,
/// or nullopt if none exists.
///
/// Uses the transversal-matroid exchange property: if the targets can be
/// matched at all, any matching of them extends by augmenting paths to a
/// maximum matching that still covers them.
std::optional<Matching> saturating_maximum_matching(
    const BipartiteView& view, const std::vector<std::size_t>& targets);

struct MatchingEnumeration {
  std::vector<Matching> matchings;
  /// More than `cap` maximum matchings exist; `matchings` holds the first
  /// `cap` found.
  bool overflow = false;
};

/// Calls `visit` for distinct maximum matchings until `cap` have been
/// visited or `visit` returns false. Returns true if the enumeration was
/// exhaustive (nothing was cut off).
bool for_each_maximum_matching(
    const BipartiteView& view, std::size_t cap,
    const std::function<bool(const Matching&)>& visit);

/// Distinct maximum matchings by recursive include/exclude over left
/// vertices, pruned on the matching size still attainable.
MatchingEnumeration enumerate_maximum_matchings(const BipartiteView& view,
                                                std::size_t cap);

}  // namespace strucres

#endif  // STRUCRES_MATCHING_HPP
