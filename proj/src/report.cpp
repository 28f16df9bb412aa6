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

#include "strucres/report.hpp"

#include <sstream>

#include "strucres/digraph.hpp"

namespace strucres {

using nlohmann::json;

namespace {

json state_list(const std::vector<std::size_t>& states) {
  json out = json::array();
  for (std::size_t s : states) out.push_back(state_label(s));
  return out;
}

json component_list(const std::vector<std::vector<std::size_t>>& comps) {
  json out = json::array();
  for (const auto& c : comps) out.push_back(state_list(c));
  return out;
}

json condition_list(const std::vector<Condition>& conds) {
  json out = json::array();
  for (Condition c : conds) out.push_back(std::string(condition_code(c)));
  return out;
}

std::string join_states(const std::vector<std::size_t>& states) {
  std::string out = "{";
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i > 0) out += ", ";
    out += state_label(states[i]);
  }
  return out + "}";
}

std::string join_matching(const Matching& m, const BipartiteView& view,
                          const LeftLabeler& label) {
  std::string out;
  for (auto [l, r] : m.edges()) {
    if (!out.empty()) out += ", ";
    out += label(view.origin(l)) + "->" + state_label(r);
  }
  return "{" + out + "}";
}

json star_json(const std::vector<Star>& stars) {
  json out = json::array();
  for (const Star& s : stars) out.push_back({s.row + 1, s.col + 1});
  return out;
}

json counts_json(const StructuralCounts& c) {
  return {{"m", c.m},
          {"beta", c.beta},
          {"alpha", c.alpha},
          {"min_links", c.min_links()}};
}

}  // namespace

std::string state_label(std::size_t state) {
  return "x" + std::to_string(state + 1);
}

LeftLabeler digraph_left_labels() {
  return [](const LeftOrigin& o) {
    return (o.block == 0 ? "x" : "u") + std::to_string(o.column + 1);
  };
}

LeftLabeler switched_left_labels(std::size_t mode_count) {
  return [mode_count](const LeftOrigin& o) {
    const std::size_t group = mode_count == 0 ? 0 : o.block / mode_count;
    const std::size_t mode = mode_count == 0 ? 0 : o.block % mode_count;
    const char* prefix = group == 0 ? "x" : group == 1 ? "u_def" : "u_att";
    return prefix + std::to_string(o.column + 1) + "@mode" +
           std::to_string(mode + 1);
  };
}

json matching_json(const Matching& m, const BipartiteView& view,
                   const LeftLabeler& label) {
  json edges = json::array();
  for (auto [l, r] : m.edges())
    edges.push_back({{"from", label(view.origin(l))}, {"to", state_label(r)}});
  return {{"size", m.size()},
          {"edges", edges},
          {"right_unmatched", state_list(m.right_unmatched())}};
}

json verdict_json(const Verdict& v, const BipartiteView& view,
                  const LeftLabeler& label) {
  json out = {{"resilient", v.resilient},
              {"violated_conditions", condition_list(v.violated)},
              {"witness_components", component_list(v.components)},
              {"witness_states", state_list(v.states)}};
  out["witness_matching"] =
      v.matching ? matching_json(*v.matching, view, label) : json(nullptr);
  return out;
}

json controllability_json(const ControllabilityReport& r,
                          const BipartiteView& view, const LeftLabeler& label) {
  return {{"controllable", r.controllable},
          {"unreachable_states", state_list(r.unreachable_states)},
          {"right_unmatched_after_inputs",
           state_list(r.right_unmatched_after_inputs)},
          {"uncovered_non_top_linked_sccs",
           component_list(r.uncovered_non_top_linked_sccs)},
          {"matching", matching_json(r.matching, view, label)}};
}

json min_design_json(const MinDesignReport& r, const BipartiteView& view) {
  return {{"m", r.m},
          {"beta", r.beta},
          {"alpha", r.alpha},
          {"min_inputs", r.min_inputs},
          {"min_links", r.min_links},
          {"m_def", r.m_def},
          {"m_att", r.m_att},
          {"m_unassigned", r.m_unassigned},
          {"witness", matching_json(r.witness, view, digraph_left_labels())}};
}

json diagnostics_json(const std::vector<DosDiagnostic>& diags) {
  json out = json::array();
  for (const auto& d : diags)
    out.push_back({{"condition", std::string(condition_code(d.clause))},
                   {"states", state_list(d.states)},
                   {"components", component_list(d.components)}});
  return out;
}

json sfi_json(const SfiReport& r) {
  const BipartiteView view = bipartite_of_digraph(digraph_of(r.a_att));
  return {{"verdict", verdict_json(r.verdict, view, digraph_left_labels())},
          {"A_att", star_json(r.a_att.stars())},
          {"B_def_prime", star_json(r.b_def_prime.stars())},
          {"added_links", star_json(r.added_links)},
          {"before", counts_json(r.before)},
          {"after", counts_json(r.after)},
          {"link_budget_holds", r.link_budget_holds},
          {"reused_b_def", r.reused_b_def},
          {"dos_resilient_before", r.dos_resilient_before},
          {"repair_notes", r.repair_notes}};
}

json oracle_json(const OracleReport& r) {
  return {{"structurally_controllable", r.structurally_controllable},
          {"n", r.n},
          {"trials", r.trials},
          {"full_rank", r.full_rank},
          {"violating_seeds", r.violating_seeds},
          {"agrees", r.agrees()}};
}

std::string render_verdict(const std::string& title, const Verdict& v,
                           const BipartiteView& view, const LeftLabeler& label) {
  std::ostringstream out;
  out << title << ": " << (v.resilient ? "RESILIENT" : "NOT RESILIENT") << "\n";
  for (Condition c : v.violated)
    out << "  violated " << condition_code(c) << ": " << condition_summary(c)
        << "\n";
  if (!v.states.empty()) out << "  witness states: " << join_states(v.states) << "\n";
  for (const auto& c : v.components)
    out << "  witness SCC: " << join_states(c) << "\n";
  if (v.matching)
    out << "  witness matching: " << join_matching(*v.matching, view, label)
        << "\n";
  return out.str();
}

std::string render_controllability(const ControllabilityReport& r) {
  std::ostringstream out;
  out << "structural controllability: "
      << (r.controllable ? "CONTROLLABLE" : "NOT CONTROLLABLE") << "\n";
  if (!r.unreachable_states.empty())
    out << "  unreachable from inputs: " << join_states(r.unreachable_states)
        << "\n";
  if (!r.right_unmatched_after_inputs.empty())
    out << "  unmatched with inputs: "
        << join_states(r.right_unmatched_after_inputs) << "\n";
  for (const auto& c : r.uncovered_non_top_linked_sccs)
    out << "  non-top-linked SCC without input: " << join_states(c) << "\n";
  return out.str();
}

std::string render_min_design(const MinDesignReport& r) {
  std::ostringstream out;
  out << "unmatched states m = " << r.m << " (x_def " << r.m_def << ", x_att "
      << r.m_att << ", other " << r.m_unassigned << ")\n"
      << "non-top-linked SCCs beta = " << r.beta << "\n"
      << "max top assignability alpha = " << r.alpha << "\n"
      << "minimum inputs = " << r.min_inputs << "\n"
      << "minimum input-state links = " << r.min_links << "\n"
      << "unmatched under witness: " << join_states(r.witness.right_unmatched())
      << "\n";
  return out.str();
}

std::string render_diagnostics(const std::vector<DosDiagnostic>& diags) {
  std::ostringstream out;
  if (diags.empty()) {
    out << "no sufficient condition for a successful DoS attack fires\n";
    return out.str();
  }
  out << "sufficient conditions for a successful DoS attack:\n";
  for (const auto& d : diags) {
    out << "  " << condition_code(d.clause) << ": " << condition_summary(d.clause);
    if (!d.states.empty()) out << " " << join_states(d.states);
    for (const auto& c : d.components) out << " SCC " << join_states(c);
    out << "\n";
  }
  return out.str();
}

std::string render_sfi(const SfiReport& r) {
  std::ostringstream out;
  const BipartiteView view = bipartite_of_digraph(digraph_of(r.a_att));
  out << render_verdict("SFI resilience", r.verdict, view, digraph_left_labels());
  out << "  m+beta-alpha: " << r.before.min_links() << " -> "
      << r.after.min_links()
      << (r.link_budget_holds ? " (link budget holds)" : " (link budget grows)")
      << "\n";
  out << "  defender pattern "
      << (r.reused_b_def ? "reused unchanged" : "extended") << "\n";
  for (const Star& s : r.added_links)
    out << "  added link u_def" << s.col + 1 << " -> " << state_label(s.row)
        << "\n";
  for (const auto& note : r.repair_notes) out << "  note: " << note << "\n";
  if (!r.dos_resilient_before)
    out << "  note: the open-loop system was not DoS resilient\n";
  return out.str();
}

std::string render_oracle(const OracleReport& r) {
  std::ostringstream out;
  out << "structural verdict: "
      << (r.structurally_controllable ? "controllable" : "not controllable")
      << "\n"
      << "full-rank realizations: " << r.full_rank << "/" << r.trials << "\n"
      << (r.agrees() ? "numeric oracle agrees" : "numeric oracle DISAGREES")
      << "\n";
  for (auto s : r.violating_seeds) out << "  violating seed: " << s << "\n";
  return out.str();
}

}  // namespace strucres
