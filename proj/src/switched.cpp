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

#include "strucres/switched.hpp"

#include <algorithm>

#include "strucres/digraph.hpp"
#include "strucres/matching.hpp"
#include "strucres/scc.hpp"

namespace strucres {

namespace {

void require_modes(const SwitchedPartitionedSystem& sys) {
  auto violations = validate_partition(sys);
  if (!violations.empty()) throw InvalidPartition(std::move(violations));
}

std::vector<StructuredMatrix> state_blocks(const SwitchedPartitionedSystem& sys) {
  std::vector<StructuredMatrix> blocks;
  for (const Mode& m : sys.modes) blocks.push_back(m.a);
  return blocks;
}

}  // namespace

UnionSystem build_union(const SwitchedPartitionedSystem& sys,
                        bool include_attacker) {
  require_modes(sys);
  const std::size_t n = sys.state_count();
  UnionSystem u;
  u.mode_count = sys.modes.size();
  u.union_a = StructuredMatrix(n, n);
  u.union_b_def = StructuredMatrix(n, sys.defender_inputs());
  u.union_b_att = StructuredMatrix(n, sys.attacker_inputs());

  std::vector<StructuredMatrix> blocks = state_blocks(sys);
  for (const Mode& m : sys.modes) {
    u.union_a = pattern_sum(u.union_a, m.a);
    u.union_b_def = pattern_sum(u.union_b_def, m.b_def);
  }
  for (const Mode& m : sys.modes) blocks.push_back(m.b_def);
  if (include_attacker) {
    for (const Mode& m : sys.modes) {
      u.union_b_att = pattern_sum(u.union_b_att, m.b_att);
      blocks.push_back(m.b_att);
    }
  }
  u.concat_view = bipartite_of_blocks(blocks);
  return u;
}

ControllabilityReport switched_structural_controllability(
    const SwitchedPartitionedSystem& sys) {
  const UnionSystem u = build_union(sys, true);
  const Digraph g = digraph_of(u.union_a, hconcat(u.union_b_def, u.union_b_att));
  const std::size_t n = g.state_count();
  ControllabilityReport report;

  std::vector<std::size_t> inputs;
  for (std::size_t j = 0; j < g.input_count(); ++j)
    inputs.push_back(g.input_vertex(j));
  std::vector<bool> reached(n, false);
  for (std::size_t v : reachable_from(g, inputs))
    if (v < n) reached[v] = true;
  for (std::size_t v = 0; v < n; ++v)
    if (!reached[v]) report.unreachable_states.push_back(v);

  report.matching = maximum_matching(u.concat_view);
  report.right_unmatched_after_inputs = report.matching.right_unmatched();

  const SccDecomposition scc = scc_decomposition(g);
  for (std::size_t c : scc.non_top_linked_components()) {
    const auto& members = scc.components[c];
    bool fed = std::any_of(members.begin(), members.end(), [&](std::size_t v) {
      const auto& preds = g.predecessors(v);
      return std::any_of(preds.begin(), preds.end(),
                         [&](std::size_t p) { return g.is_input(p); });
    });
    if (!fed) report.uncovered_non_top_linked_sccs.push_back(members);
  }
  report.controllable = report.unreachable_states.empty() &&
                        report.right_unmatched_after_inputs.empty() &&
                        report.uncovered_non_top_linked_sccs.empty();
  return report;
}

Verdict switched_dos_resilience(const SwitchedPartitionedSystem& sys) {
  const UnionSystem u = build_union(sys, false);
  const std::size_t n = sys.state_count();
  const std::size_t d = sys.defender_inputs();
  const std::vector<StructuredMatrix> blocks = state_blocks(sys);
  const BipartiteView concat_a = bipartite_of_blocks(blocks);
  const SccDecomposition scc = scc_decomposition(digraph_of(u.union_a));
  Verdict v;

  // (1) no source component made only of attacker states
  for (std::size_t c : scc.non_top_linked_components()) {
    const auto& members = scc.components[c];
    if (std::all_of(members.begin(), members.end(),
                    [&](std::size_t s) { return sys.x_att.contains(s); })) {
      v.violate(Condition::kAttackerOnlySourceComponent);
      v.components.push_back(members);
    }
  }

  // (2) some maximum matching of the concatenation covers x_att
  const Matching att_first =
      prioritized_maximum_matching(concat_a, membership_mask(sys.x_att, n));
  for (std::size_t r : att_first.right_unmatched()) {
    if (sys.x_att.contains(r)) {
      v.violate(Condition::kAttackerStateAlwaysUnmatched);
      v.states.push_back(r);
    }
  }

  // (3) the same matching's unmatched states take distinct defender
  //     actuators. Augmenting from att_first in the view extended by one
  //     left vertex per actuator keeps the state part maximum and x_att
  //     covered, since actuators only reach x_def.
  BipartiteView with_inputs = concat_a;
  const std::size_t base = concat_a.left_count();
  for (std::size_t j = 0; j < d; ++j) {
    std::size_t left = with_inputs.add_left({blocks.size(), j});
    for (std::size_t r = 0; r < n; ++r)
      if (u.union_b_def.is_star(r, j)) with_inputs.add_edge(left, r);
  }
  Matching lifted(with_inputs.left_count(), n);
  for (auto [l, r] : att_first.edges()) lifted.add(l, r);
  const Matching full = maximum_matching(with_inputs, std::move(lifted));
  Matching witness(base, n);
  for (auto [l, r] : full.edges())
    if (l < base) witness.add(l, r);
  if (full.size() < n) {
    v.violate(Condition::kUnmatchedWithoutDedicatedInput);
    for (std::size_t r : full.right_unmatched()) v.states.push_back(r);
  }
  v.matching = std::move(witness);

  // d >= m_def, with m_def at its smallest over maximum matchings
  const Matching def_first =
      prioritized_maximum_matching(concat_a, membership_mask(sys.x_def, n));
  std::size_t m_def = 0;
  for (std::size_t r : def_first.right_unmatched())
    if (sys.x_def.contains(r)) ++m_def;
  if (d < m_def) v.violate(Condition::kDefenderInputsBelowUnmatched);

  // (4) every source component has a defender-driven x_def state
  for (std::size_t c : scc.non_top_linked_components()) {
    const auto& members = scc.components[c];
    bool fed = std::any_of(members.begin(), members.end(), [&](std::size_t s) {
      if (!sys.x_def.contains(s)) return false;
      for (std::size_t j = 0; j < d; ++j)
        if (u.union_b_def.is_star(s, j)) return true;
      return false;
    });
    if (!fed) {
      v.violate(Condition::kSourceComponentWithoutDefenderInput);
      if (std::find(v.components.begin(), v.components.end(), members) ==
          v.components.end())
        v.components.push_back(members);
    }
  }

  std::sort(v.states.begin(), v.states.end());
  v.states.erase(std::unique(v.states.begin(), v.states.end()), v.states.end());
  return v;
}

}  // namespace strucres
