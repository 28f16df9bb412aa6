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

#include "strucres/resilience.hpp"

#include <algorithm>

#include "strucres/bipartite.hpp"
#include "strucres/digraph.hpp"
#include "strucres/scc.hpp"
#include "strucres/top_assignability.hpp"

namespace strucres {

std::string_view condition_code(Condition c) {
  switch (c) {
    case Condition::kNotStructurallyControllable:
      return "dos.not_structurally_controllable";
    case Condition::kAttackerStateAlwaysUnmatched:
      return "dos.attacker_state_always_unmatched";
    case Condition::kAttackerOnlySourceComponent:
      return "dos.attacker_only_source_component";
    case Condition::kDefenderInputsBelowUnmatched:
      return "switched.defender_inputs_below_unmatched";
    case Condition::kUnmatchedWithoutDedicatedInput:
      return "switched.unmatched_without_dedicated_input";
    case Condition::kSourceComponentWithoutDefenderInput:
      return "switched.source_component_without_defender_input";
    case Condition::kInputBudgetWithoutDefenderInputs:
      return "dos_attack.input_budget_defender_short";
    case Condition::kLinkBudgetWithoutDefenderInputs:
      return "dos_attack.link_budget_defender_short";
    case Condition::kStateUnreachableFromDefender:
      return "dos_attack.state_unreachable_from_defender";
    case Condition::kNoDefenderPathCycleCover:
      return "dos_attack.no_defender_path_cycle_cover";
    case Condition::kDefenderLinkDeficit:
      return "dos_attack.defender_link_deficit";
    case Condition::kAttackerAvoidsDefenderStates:
      return "integrity.attacker_avoids_defender_states";
    case Condition::kNoDefenderOnlySourceComponent:
      return "integrity.no_defender_only_source_component";
    case Condition::kAttackerCompleteControl:
      return "integrity.attacker_complete_control";
  }
  return "unknown";
}

std::string_view condition_summary(Condition c) {
  switch (c) {
    case Condition::kNotStructurallyControllable:
      return "the system is not structurally controllable from defender inputs";
    case Condition::kAttackerStateAlwaysUnmatched:
      return "every maximum matching leaves an attacker state unmatched";
    case Condition::kAttackerOnlySourceComponent:
      return "a non-top-linked SCC consists only of attacker states";
    case Condition::kDefenderInputsBelowUnmatched:
      return "fewer defender inputs than unmatched defender states";
    case Condition::kUnmatchedWithoutDedicatedInput:
      return "unmatched states cannot each get a distinct defender input";
    case Condition::kSourceComponentWithoutDefenderInput:
      return "a non-top-linked SCC has no defender-driven state";
    case Condition::kInputBudgetWithoutDefenderInputs:
      return "p >= m + beta - alpha but d < m_def";
    case Condition::kLinkBudgetWithoutDefenderInputs:
      return "p >= m and |l(u -> X)| >= m + beta - alpha but d < m_def";
    case Condition::kStateUnreachableFromDefender:
      return "a state is unreachable from every defender input";
    case Condition::kNoDefenderPathCycleCover:
      return "no defender-rooted path family and cycle family cover all states";
    case Condition::kDefenderLinkDeficit:
      return "|l(u_def -> X)| < m_def + beta - alpha";
    case Condition::kAttackerAvoidsDefenderStates:
      return "some maximum matching leaves no defender state unmatched";
    case Condition::kNoDefenderOnlySourceComponent:
      return "no non-top-linked SCC consists only of defender states";
    case Condition::kAttackerCompleteControl:
      return "the attacker alone can make the system structurally controllable";
  }
  return "unknown condition";
}

void Verdict::violate(Condition c) {
  resilient = false;
  if (std::find(violated.begin(), violated.end(), c) == violated.end())
    violated.push_back(c);
}

namespace {

void require_partition(const PartitionedSystem& sys) {
  auto violations = validate_partition(sys);
  if (!violations.empty()) throw InvalidPartition(std::move(violations));
}

void require_states(const StructuredMatrix& a, const StateSet& x_def,
                    const StateSet& x_att) {
  if (!a.is_square())
    throw DimensionError("system pattern must be square");
  PartitionedSystem probe{a, StructuredMatrix(a.rows(), 0),
                          StructuredMatrix(a.rows(), 0), x_def, x_att};
  require_partition(probe);
}

std::vector<std::size_t> complement(const StateSet& s, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v)
    if (!s.contains(v)) out.push_back(v);
  return out;
}

bool inside(const std::vector<std::size_t>& states, const StateSet& set) {
  return std::all_of(states.begin(), states.end(),
                     [&](std::size_t v) { return set.contains(v); });
}

std::vector<std::vector<std::size_t>> source_components_inside(
    const SccDecomposition& scc, const StateSet& set) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t c : scc.non_top_linked_components())
    if (inside(scc.components[c], set)) out.push_back(scc.components[c]);
  return out;
}

std::vector<std::size_t> unmatched_in(const Matching& m, const StateSet& set) {
  std::vector<std::size_t> out;
  for (std::size_t r : m.right_unmatched())
    if (set.contains(r)) out.push_back(r);
  return out;
}

}  // namespace

ControllabilityReport is_structurally_controllable(const StructuredMatrix& a,
                                                   const StructuredMatrix& b) {
  const Digraph g = digraph_of(a, b);
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

  report.matching = maximum_matching(bipartite_of_digraph(g));
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

StructuralCounts structural_counts(const StructuredMatrix& a) {
  const Digraph g = digraph_of(a);
  const BipartiteView view = bipartite_of_digraph(g);
  const SccDecomposition scc = scc_decomposition(g);
  const TopAssignability top = max_top_assignability_index(view, scc);
  return {top.witness.right_unmatched().size(),
          scc.non_top_linked_components().size(), top.alpha};
}

MinDesignReport min_design_report(const StructuredMatrix& a,
                                  const StateSet& x_def,
                                  const StateSet& x_att) {
  require_states(a, x_def, x_att);
  const Digraph g = digraph_of(a);
  const SccDecomposition scc = scc_decomposition(g);
  TopAssignability top = max_top_assignability_index(bipartite_of_digraph(g), scc);

  MinDesignReport r;
  r.m = top.witness.right_unmatched().size();
  r.beta = scc.non_top_linked_components().size();
  r.alpha = top.alpha;
  r.min_inputs = r.m == 0 ? 1 : r.m;
  r.min_links = r.m + r.beta - r.alpha;
  for (std::size_t v : top.witness.right_unmatched()) {
    if (x_def.contains(v))
      ++r.m_def;
    else if (x_att.contains(v))
      ++r.m_att;
    else
      ++r.m_unassigned;
  }
  r.witness = std::move(top.witness);
  return r;
}

std::size_t min_defender_unmatched(const StructuredMatrix& a,
                                   const StateSet& x_def) {
  const BipartiteView view = bipartite_of_digraph(digraph_of(a));
  const Matching m =
      prioritized_maximum_matching(view, membership_mask(x_def, a.rows()));
  return unmatched_in(m, x_def).size();
}

std::vector<DosDiagnostic> dos_success_diagnostics(
    const PartitionedSystem& sys) {
  require_partition(sys);
  const std::size_t n = sys.state_count();
  const std::size_t p = sys.input_count();
  const std::size_t d = sys.defender_inputs();
  const std::size_t links_all = sys.b_def.star_count() + sys.b_att.star_count();
  const std::size_t links_def = sys.b_def.star_count();

  const Digraph g = digraph_of(sys.a);
  const BipartiteView view = bipartite_of_digraph(g);
  const SccDecomposition scc = scc_decomposition(g);
  const TopAssignability top = max_top_assignability_index(view, scc);
  const std::size_t m = top.witness.right_unmatched().size();
  const std::size_t beta = scc.non_top_linked_components().size();
  const std::size_t min_links = m + beta - top.alpha;

  // m_def is taken at its smallest over all maximum matchings, which keeps
  // every clause below a sound sufficient condition.
  const Matching def_first =
      prioritized_maximum_matching(view, membership_mask(sys.x_def, n));
  const std::vector<std::size_t> def_unmatched =
      unmatched_in(def_first, sys.x_def);
  const std::size_t m_def = def_unmatched.size();

  std::vector<DosDiagnostic> out;
  if (d < m_def) {
    if (p >= min_links)
      out.push_back({Condition::kInputBudgetWithoutDefenderInputs,
                     def_unmatched, {}});
    if (p >= m && links_all >= min_links)
      out.push_back({Condition::kLinkBudgetWithoutDefenderInputs,
                     def_unmatched, {}});
  }

  const ControllabilityReport ctrl =
      is_structurally_controllable(sys.a, sys.b_def);
  if (!ctrl.unreachable_states.empty())
    out.push_back({Condition::kStateUnreachableFromDefender,
                   ctrl.unreachable_states, {}});
  if (!ctrl.right_unmatched_after_inputs.empty())
    out.push_back({Condition::kNoDefenderPathCycleCover,
                   ctrl.right_unmatched_after_inputs, {}});
  if (links_def < m_def + beta - top.alpha)
    out.push_back({Condition::kDefenderLinkDeficit, def_unmatched, {}});

  const Matching att_first =
      prioritized_maximum_matching(view, membership_mask(sys.x_att, n));
  std::vector<std::size_t> att_unmatched = unmatched_in(att_first, sys.x_att);
  if (!att_unmatched.empty())
    out.push_back({Condition::kAttackerStateAlwaysUnmatched,
                   std::move(att_unmatched), {}});

  auto att_sources = source_components_inside(scc, sys.x_att);
  if (!att_sources.empty())
    out.push_back({Condition::kAttackerOnlySourceComponent, {},
                   std::move(att_sources)});
  return out;
}

Verdict dos_resilience(const PartitionedSystem& sys) {
  require_partition(sys);
  const std::size_t n = sys.state_count();
  Verdict v;

  const ControllabilityReport ctrl =
      is_structurally_controllable(sys.a, sys.b_def);
  if (!ctrl.controllable) {
    v.violate(Condition::kNotStructurallyControllable);
    std::vector<std::size_t> states = ctrl.unreachable_states;
    states.insert(states.end(), ctrl.right_unmatched_after_inputs.begin(),
                  ctrl.right_unmatched_after_inputs.end());
    std::sort(states.begin(), states.end());
    states.erase(std::unique(states.begin(), states.end()), states.end());
    v.states = std::move(states);
  }

  const Digraph g = digraph_of(sys.a);
  const BipartiteView view = bipartite_of_digraph(g);
  const Matching att_first =
      prioritized_maximum_matching(view, membership_mask(sys.x_att, n));
  std::vector<std::size_t> att_unmatched = unmatched_in(att_first, sys.x_att);
  if (!att_unmatched.empty()) {
    v.violate(Condition::kAttackerStateAlwaysUnmatched);
    v.states.insert(v.states.end(), att_unmatched.begin(), att_unmatched.end());
    std::sort(v.states.begin(), v.states.end());
    v.states.erase(std::unique(v.states.begin(), v.states.end()), v.states.end());
  }
  v.matching = att_first;

  auto att_sources = source_components_inside(scc_decomposition(g), sys.x_att);
  if (!att_sources.empty()) {
    v.violate(Condition::kAttackerOnlySourceComponent);
    v.components = std::move(att_sources);
  }
  return v;
}

Verdict integrity_resilience(const StructuredMatrix& a_def,
                             const StateSet& x_def, const StateSet& x_att) {
  require_states(a_def, x_def, x_att);
  const Digraph g = digraph_of(a_def);
  const BipartiteView view = bipartite_of_digraph(g);
  const Matching def_first =
      prioritized_maximum_matching(view, membership_mask(x_def, a_def.rows()));
  const std::vector<std::size_t> def_unmatched = unmatched_in(def_first, x_def);
  auto def_sources = source_components_inside(scc_decomposition(g), x_def);

  Verdict v;
  v.matching = def_first;
  v.states = def_unmatched;
  v.components = std::move(def_sources);
  if (def_unmatched.empty() && v.components.empty()) {
    v.violate(Condition::kAttackerAvoidsDefenderStates);
    v.violate(Condition::kNoDefenderOnlySourceComponent);
  }
  return v;
}

Verdict attacker_complete_controllability(const StructuredMatrix& a_def,
                                          const StateSet& x_def,
                                          const StateSet& x_att) {
  require_states(a_def, x_def, x_att);
  const std::size_t n = a_def.rows();
  const Digraph g = digraph_of(a_def);
  const BipartiteView view = bipartite_of_digraph(g);
  const SccDecomposition scc = scc_decomposition(g);

  const std::vector<std::size_t> must_match = complement(x_att, n);
  std::optional<Matching> sat = saturating_maximum_matching(view, must_match);

  Verdict v;
  std::vector<std::vector<std::size_t>> outside;
  for (std::size_t c : scc.non_top_linked_components())
    if (!inside(scc.components[c], x_att)) outside.push_back(scc.components[c]);

  if (sat && outside.empty()) {
    v.violate(Condition::kAttackerCompleteControl);
    v.matching = std::move(sat);
    for (std::size_t c : scc.non_top_linked_components())
      v.components.push_back(scc.components[c]);
    v.states = v.matching->right_unmatched();
    return v;
  }
  // Takeover blocked: report what blocks it.
  v.components = std::move(outside);
  if (!sat) {
    std::vector<bool> mask(n, false);
    for (std::size_t s : must_match) mask[s] = true;
    Matching best = prioritized_maximum_matching(view, mask);
    for (std::size_t r : best.right_unmatched())
      if (!x_att.contains(r)) v.states.push_back(r);
    v.matching = std::move(best);
  }
  return v;
}

namespace {

struct Repair {
  StructuredMatrix b;
  std::vector<Star> added;
  std::vector<std::string> notes;
};

std::string state_name(std::size_t v) { return "x" + std::to_string(v + 1); }

// Adds defender links until (a, b) is structurally controllable, only ever
// linking existing defender columns to x_def states.
Repair repair_defender_links(const StructuredMatrix& a,
                             const StructuredMatrix& b_def,
                             const StateSet& x_def) {
  const std::size_t n = a.rows();
  const std::size_t d = b_def.cols();
  Repair out{b_def, {}, {}};
  auto link = [&](std::size_t state, std::size_t col) {
    out.b.add_star(state, col);
    out.added.push_back({state, col});
  };

  const Digraph g = digraph_of(a);
  const SccDecomposition scc = scc_decomposition(g);

  // 1. A maximum matching of B([A]) whose unmatched states avoid the
  //    non-defender states as far as possible.
  std::vector<bool> non_def(n, false);
  for (std::size_t v = 0; v < n; ++v) non_def[v] = !x_def.contains(v);
  const Matching inner = prioritized_maximum_matching(bipartite_of_digraph(g), non_def);
  std::vector<std::size_t> need;
  for (std::size_t r : inner.right_unmatched()) {
    if (x_def.contains(r))
      need.push_back(r);
    else
      out.notes.push_back(state_name(r) +
                          " needs a dedicated input but is not in x_def");
  }

  // 2. Distinct defender columns for the unmatched states, reusing links
  //    already present.
  BipartiteView cols(n);
  for (std::size_t j = 0; j < d; ++j) cols.add_left({1, j});
  for (std::size_t r : need)
    for (std::size_t j = 0; j < d; ++j)
      if (b_def.is_star(r, j)) cols.add_edge(j, r);
  Matching assigned = maximum_matching(cols);
  for (std::size_t r : need) {
    if (assigned.right_matched(r)) continue;
    std::size_t chosen = kUnmatched;
    for (std::size_t j = 0; j < d && chosen == kUnmatched; ++j) {
      if (assigned.left_matched(j)) continue;
      for (std::size_t s : scc.components[scc.component_of[r]])
        if (out.b.is_star(s, j)) {
          chosen = j;
          break;
        }
    }
    for (std::size_t j = 0; j < d && chosen == kUnmatched; ++j)
      if (!assigned.left_matched(j)) chosen = j;
    if (chosen == kUnmatched) {
      out.notes.push_back("no free defender input left for " + state_name(r));
      continue;
    }
    assigned.add(chosen, r);
    link(r, chosen);
  }

  // 3. Every source component needs an input edge.
  for (std::size_t c : scc.non_top_linked_components()) {
    const auto& members = scc.components[c];
    bool fed = false;
    for (std::size_t s : members)
      for (std::size_t j = 0; j < d && !fed; ++j) fed = out.b.is_star(s, j);
    if (fed) continue;
    auto target = std::find_if(members.begin(), members.end(),
                               [&](std::size_t s) { return x_def.contains(s); });
    if (target == members.end()) {
      out.notes.push_back("source SCC containing " + state_name(members.front()) +
                          " has no x_def state");
      continue;
    }
    if (d == 0) {
      out.notes.push_back("no defender input available for the source SCC of " +
                          state_name(*target));
      continue;
    }
    link(*target, 0);
  }
  return out;
}

}  // namespace

SfiReport sfi_resilience(const PartitionedSystem& sys,
                         const StructuredMatrix& k_att) {
  require_partition(sys);
  if (k_att.rows() != sys.attacker_inputs() || k_att.cols() != sys.state_count())
    throw DimensionError("sfi_resilience: K_att must be " +
                         std::to_string(sys.attacker_inputs()) + "x" +
                         std::to_string(sys.state_count()));

  SfiReport r;
  r.a_att = closed_loop(sys.a, sys.b_att, k_att);
  r.before = structural_counts(sys.a);
  r.after = structural_counts(r.a_att);
  r.link_budget_holds = r.after.min_links() <= r.before.min_links();
  r.dos_resilient_before = dos_resilience(sys).resilient;

  r.b_def_prime = sys.b_def;
  if (!is_structurally_controllable(r.a_att, sys.b_def).controllable) {
    Repair repair = repair_defender_links(r.a_att, sys.b_def, sys.x_def);
    r.b_def_prime = std::move(repair.b);
    r.added_links = std::move(repair.added);
    r.repair_notes = std::move(repair.notes);
  }
  r.reused_b_def = r.b_def_prime == sys.b_def;
  r.verdict = dos_resilience(
      {r.a_att, r.b_def_prime, sys.b_att, sys.x_def, sys.x_att});
  return r;
}

}  // namespace strucres
