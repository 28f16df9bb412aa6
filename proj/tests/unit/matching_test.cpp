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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "strucres/bipartite.hpp"
#include "strucres/digraph.hpp"
#include "strucres/matching.hpp"
#include "strucres/scc.hpp"
#include "strucres/top_assignability.hpp"

namespace strucres {
namespace {

using fixtures::list;

BipartiteView view_of(const StructuredMatrix& a) {
  return bipartite_of_digraph(digraph_of(a));
}

std::set<std::vector<std::size_t>> unmatched_sets(const BipartiteView& v) {
  std::set<std::vector<std::size_t>> out;
  for (const auto& m : enumerate_maximum_matchings(v, 100000).matchings)
    out.insert(m.right_unmatched());
  return out;
}

TEST(MatchingType, RejectsReusedEndpoints) {
  Matching m(2, 2);
  m.add(0, 1);
  EXPECT_THROW(m.add(1, 1), std::logic_error);
  EXPECT_THROW(m.add(0, 0), std::logic_error);
  m.remove_left(0);
  m.add(1, 1);
  EXPECT_EQ(m.size(), 1u);
}

TEST(MaximumMatching, SevenStateExample) {
  const BipartiteView v = view_of(fixtures::ex1());
  const Matching m = maximum_matching(v);
  EXPECT_TRUE(is_matching_of(v, m));
  EXPECT_EQ(m.size(), 5u);
  const auto sets = unmatched_sets(v);
  EXPECT_TRUE(sets.count(list({3, 5})));
  EXPECT_TRUE(sets.count(list({4, 5})));
}

TEST(MaximumMatching, EmptyAndDegenerateViews) {
  EXPECT_EQ(maximum_matching(BipartiteView(0)).size(), 0u);
  EXPECT_EQ(maximum_matching(view_of(StructuredMatrix(4, 4))).size(), 0u);
  EXPECT_EQ(maximum_matching(view_of(StructuredMatrix::full(5, 5))).size(), 5u);
}

TEST(MaximumMatching, AugmentsFromInitialMatching) {
  const BipartiteView v = view_of(fixtures::ex1());
  Matching start(v.left_count(), v.right_count());
  start.add(1, 3);  // s2 -> w4
  const Matching m = maximum_matching(v, start);
  EXPECT_EQ(m.size(), 5u);
  EXPECT_TRUE(m.left_matched(1));
  EXPECT_TRUE(m.right_matched(3));
}

TEST(MaximumMatching, LargeChainIsFast) {
  const std::size_t n = 100000;
  BipartiteView v(n);
  for (std::size_t l = 0; l < n; ++l) {
    v.add_left({0, l});
    v.add_edge(l, l);
    if (l + 1 < n) v.add_edge(l, l + 1);
  }
  EXPECT_EQ(maximum_matching(v).size(), n);
}

TEST(SaturatingMatching, SevenStateTargets) {
  const BipartiteView v = view_of(fixtures::ex1());
  const auto m = saturating_maximum_matching(v, list({4, 6, 7}));
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->size(), 5u);
  for (std::size_t r : list({4, 6, 7})) EXPECT_TRUE(m->right_matched(r));
  EXPECT_FALSE(saturating_maximum_matching(v, list({5})).has_value());
  EXPECT_TRUE(saturating_maximum_matching(v, {}).has_value());
}

TEST(PrioritizedMatching, PrefersPriorityVertices) {
  const BipartiteView v = view_of(fixtures::ex1());
  std::vector<bool> prio(7, false);
  prio[2] = true;  // w3
  const Matching m = prioritized_maximum_matching(v, prio);
  EXPECT_EQ(m.size(), 5u);
  EXPECT_TRUE(m.right_matched(2));
}

TEST(Enumeration, RespectsCap) {
  const BipartiteView v = view_of(StructuredMatrix::full(5, 5));
  const auto e = enumerate_maximum_matchings(v, 10);
  EXPECT_EQ(e.matchings.size(), 10u);
  EXPECT_TRUE(e.overflow);
  const auto all = enumerate_maximum_matchings(v, 1000);
  EXPECT_EQ(all.matchings.size(), 120u);
  EXPECT_FALSE(all.overflow);
  EXPECT_THROW(enumerate_maximum_matchings(v, 0), std::invalid_argument);
}

TEST(Enumeration, VisitorCanStopEarly) {
  const BipartiteView v = view_of(StructuredMatrix::full(4, 4));
  std::size_t seen = 0;
  const bool complete = for_each_maximum_matching(v, 1000, [&](const Matching&) {
    return ++seen < 3;
  });
  EXPECT_EQ(seen, 3u);
  EXPECT_FALSE(complete);
}

TEST(MatchingProperty, SizeAndEnumerationAgreeWithBruteForce) {
  gen::Gen g(31);
  for (int t = 0; t < 300; ++t) {
    const BipartiteView v = g.view(g.size(0, 7), g.size(0, 7), 0.1 + 0.5 * g.unit());
    const auto ref = oracle::maximum_matchings(oracle::bigraph(v));
    const Matching m = maximum_matching(v);
    ASSERT_TRUE(is_matching_of(v, m));
    ASSERT_EQ(m.size(), oracle::matching_size(ref.front()));

    std::set<std::vector<std::size_t>> want;
    for (const auto& mate : ref) want.insert(mate);
    std::set<std::vector<std::size_t>> got;
    for (const auto& x : enumerate_maximum_matchings(v, 1000000).matchings) {
      std::vector<std::size_t> mate(v.left_count());
      for (std::size_t l = 0; l < v.left_count(); ++l) mate[l] = x.mate_of_left(l);
      got.insert(mate);
    }
    ASSERT_EQ(got, want);
  }
}

TEST(MatchingProperty, PrioritizedMatchesAsManyPriorityVerticesAsPossible) {
  gen::Gen g(32);
  for (int t = 0; t < 300; ++t) {
    const std::size_t right = g.size(1, 7);
    const BipartiteView v = g.view(g.size(0, 7), right, 0.3);
    std::vector<bool> prio(right);
    for (std::size_t r = 0; r < right; ++r) prio[r] = g.coin(0.5);
    const Matching m = prioritized_maximum_matching(v, prio);
    ASSERT_TRUE(is_matching_of(v, m));
    auto covered = [&](const std::vector<std::size_t>& free) {
      std::size_t c = 0;
      for (std::size_t r = 0; r < right; ++r)
        if (prio[r] && !std::binary_search(free.begin(), free.end(), r)) ++c;
      return c;
    };
    std::size_t best = 0;
    const auto ref = oracle::maximum_matchings(oracle::bigraph(v));
    for (const auto& mate : ref)
      best = std::max(best, covered(oracle::unmatched_right(mate, right)));
    ASSERT_EQ(m.size(), oracle::matching_size(ref.front()));
    ASSERT_EQ(covered(m.right_unmatched()), best);
  }
}

TEST(TopAssignability, SevenStateExample) {
  const TopAssignability t = max_top_assignability_index(fixtures::ex1());
  EXPECT_EQ(t.alpha, 2u);
  EXPECT_EQ(t.witness.size(), 5u);
  EXPECT_EQ(t.witness.right_unmatched(), list({3, 5}));
  EXPECT_EQ(t.top_assignable.size(), 2u);
}

TEST(TopAssignability, DegenerateCases) {
  EXPECT_EQ(max_top_assignability_index(StructuredMatrix(3, 3)).alpha, 3u);
  const auto cycle = fixtures::pattern(3, 3, {{2, 1}, {3, 2}, {1, 3}});
  EXPECT_EQ(max_top_assignability_index(cycle).alpha, 0u);
}

TEST(TopAssignabilityProperty, AgreesWithEnumeration) {
  gen::Gen g(33);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = g.size(1, 7);
    const auto a = g.pattern(n, n);
    const TopAssignability ta = max_top_assignability_index(a);
    ASSERT_EQ(ta.alpha, oracle::alpha(a)) << to_string(a);
    const BipartiteView v = view_of(a);
    ASSERT_TRUE(is_matching_of(v, ta.witness));
    ASSERT_EQ(ta.witness.size(), maximum_matching(v).size());
    const auto scc = scc_decomposition(digraph_of(a));
    ASSERT_EQ(top_assignable_components(scc, ta.witness).size(), ta.alpha);
  }
}

}  // namespace
}  // namespace strucres
