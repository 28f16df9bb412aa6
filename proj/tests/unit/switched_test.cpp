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
#include <numeric>
#include <vector>

#include "fixtures.hpp"
#include "generators.hpp"
#include "strucres/matching.hpp"
#include "strucres/resilience.hpp"
#include "strucres/switched.hpp"

namespace strucres {
namespace {

using fixtures::pattern;
using fixtures::states;

SwitchedPartitionedSystem two_mode(const StructuredMatrix& b_def_a,
                                   const StructuredMatrix& b_def_b,
                                   StateSet x_def, StateSet x_att) {
  SwitchedPartitionedSystem sys;
  sys.modes.push_back({fixtures::ex1a(), b_def_a, StructuredMatrix(7, 0)});
  sys.modes.push_back({fixtures::ex1b(), b_def_b, StructuredMatrix(7, 0)});
  sys.x_def = std::move(x_def);
  sys.x_att = std::move(x_att);
  return sys;
}

SwitchedPartitionedSystem single(const PartitionedSystem& p) {
  return {{{p.a, p.b_def, p.b_att}}, p.x_def, p.x_att};
}

TEST(BuildUnion, CountsAndUnion) {
  const auto sys = two_mode(pattern(7, 2, {{3, 1}}), pattern(7, 2, {{5, 2}}),
                            states({1, 2, 3, 5}), states({4, 6, 7}));
  const UnionSystem u = build_union(sys, false);
  EXPECT_EQ(u.union_a, fixtures::ex1());
  EXPECT_EQ(u.union_b_def, fixtures::f1_b_def());
  EXPECT_EQ(u.mode_count, 2u);
  EXPECT_EQ(u.concat_view.left_count(), 2u * 7 + 2u * 2);
}

TEST(SwitchedControllability, TwoModeSplit) {
  const auto with_inputs = two_mode(pattern(7, 2, {{3, 1}}), pattern(7, 2, {{5, 2}}),
                                    states({1, 2, 3, 5}), states({4, 6, 7}));
  const auto r = switched_structural_controllability(with_inputs);
  EXPECT_TRUE(r.controllable);
  EXPECT_EQ(r.matching.size(), 7u);

  const auto bare = two_mode(StructuredMatrix(7, 0), StructuredMatrix(7, 0),
                             states({1, 2, 3, 5}), states({4, 6, 7}));
  const auto n = switched_structural_controllability(bare);
  EXPECT_FALSE(n.controllable);
  EXPECT_NE(std::find(n.right_unmatched_after_inputs.begin(),
                      n.right_unmatched_after_inputs.end(), 4u),
            n.right_unmatched_after_inputs.end());
  EXPECT_EQ(n.uncovered_non_top_linked_sccs.size(), 2u);
}

TEST(SwitchedDos, TwoModeSplit) {
  const auto sys = two_mode(pattern(7, 2, {{3, 1}}), pattern(7, 2, {{5, 2}}),
                            states({1, 2, 3, 5}), states({4, 6, 7}));
  EXPECT_TRUE(switched_dos_resilience(sys).resilient);

  const auto exposed = two_mode(pattern(7, 1, {{3, 1}}), StructuredMatrix(7, 1),
                                states({1, 2, 3}), states({4, 5, 6, 7}));
  const Verdict v = switched_dos_resilience(exposed);
  EXPECT_FALSE(v.resilient);
  EXPECT_NE(std::find(v.violated.begin(), v.violated.end(),
                      Condition::kAttackerStateAlwaysUnmatched),
            v.violated.end());
}

TEST(SwitchedDos, SingleModeTenState) {
  const auto p = fixtures::ex2_system(fixtures::ex2b());
  EXPECT_TRUE(switched_dos_resilience(single(p)).resilient);
}

TEST(SwitchedProperty, SingleModeAgreesWithSingleModeAnalyses) {
  gen::Gen g(51);
  for (int t = 0; t < 300; ++t) {
    const auto p = g.system(g.size(1, 6));
    const auto s = single(p);
    ASSERT_EQ(switched_dos_resilience(s).resilient, dos_resilience(p).resilient)
        << to_string(p.a);
    ASSERT_EQ(switched_structural_controllability(s).controllable,
              is_structurally_controllable(p.a, hconcat(p.b_def, p.b_att))
                  .controllable);
  }
}

TEST(SwitchedProperty, ModeOrderDoesNotMatter) {
  gen::Gen g(52);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = g.size(1, 6), d = g.size(1, 2), at = g.size(0, 2);
    SwitchedPartitionedSystem sys;
    g.partition(n, sys.x_def, sys.x_att);
    for (int k = 0; k < 3; ++k)
      sys.modes.push_back({g.pattern(n, n, 0.15),
                           g.rows_pattern(n, d, sys.x_def, 0.2),
                           g.rows_pattern(n, at, sys.x_att, 0.2)});
    const bool dos = switched_dos_resilience(sys).resilient;
    const bool ctrl = switched_structural_controllability(sys).controllable;
    std::vector<std::size_t> order{0, 1, 2};
    while (std::next_permutation(order.begin(), order.end())) {
      SwitchedPartitionedSystem perm = sys;
      for (std::size_t k = 0; k < 3; ++k) perm.modes[k] = sys.modes[order[k]];
      ASSERT_EQ(switched_dos_resilience(perm).resilient, dos);
      ASSERT_EQ(switched_structural_controllability(perm).controllable, ctrl);
    }
  }
}

TEST(SwitchedProperty, ConcatenationMatchesAtLeastTheUnion) {
  gen::Gen g(53);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = g.size(1, 7);
    const auto a = g.pattern(n, n);
    SwitchedPartitionedSystem sys;
    const std::size_t z = g.size(1, 3);
    for (std::size_t k = 0; k < z; ++k)
      sys.modes.push_back({StructuredMatrix(n, n), StructuredMatrix(n, 1),
                           StructuredMatrix(n, 0)});
    for (const Star& s : a.stars()) sys.modes[g.size(0, z - 1)].a.add_star(s.row, s.col);
    const UnionSystem u = build_union(sys, false);
    ASSERT_EQ(u.union_a, a);
    const BipartiteView flat = bipartite_of_digraph(digraph_of(a));
    ASSERT_GE(maximum_matching(u.concat_view).size(), maximum_matching(flat).size());
  }
}

}  // namespace
}  // namespace strucres
