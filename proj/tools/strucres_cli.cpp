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

// Command-line front end. Exit status: 0 when the analysis ran and the
// verdict is positive, 1 when it is negative, 2 on input errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "strucres/bipartite.hpp"
#include "strucres/digraph.hpp"
#include "strucres/document.hpp"
#include "strucres/dot_export.hpp"
#include "strucres/matching.hpp"
#include "strucres/numeric_oracle.hpp"
#include "strucres/report.hpp"
#include "strucres/resilience.hpp"
#include "strucres/switched.hpp"

namespace {

using namespace strucres;
using nlohmann::json;

constexpr int kPositive = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

struct Options {
  std::string file;
  bool json_out = false;
  std::size_t max_enumerate = 1000;
  std::string k_file;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  bool witness = false;
};

class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

PartitionedSystem single_mode(const SystemDocument& doc,
                              const std::string& command) {
  if (!doc.single_mode())
    throw InputError(command + " needs a single-mode system; the document has " +
                     std::to_string(doc.system.modes.size()) + " modes");
  return doc.system.mode_system(0);
}

/// Gain pattern from --k-def/--k-att, else from the document, else none.
std::optional<StructuredMatrix> gain(const Options& opt,
                                     const std::optional<StructuredMatrix>& own,
                                     std::size_t rows, std::size_t n,
                                     const char* key) {
  if (!opt.k_file.empty())
    return parse_star_list(read_file(opt.k_file), rows, n, key);
  return own;
}

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.json_out)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

json unmatched_sets(const BipartiteView& view, std::size_t cap) {
  std::set<std::vector<std::size_t>> sets;
  const bool complete =
      for_each_maximum_matching(view, cap, [&](const Matching& m) {
        sets.insert(m.right_unmatched());
        return true;
      });
  json list = json::array();
  for (const auto& s : sets) {
    json one = json::array();
    for (std::size_t x : s) one.push_back(state_label(x));
    list.push_back(one);
  }
  return {{"sets", list}, {"enumeration_complete", complete}};
}

int run_analyze(const Options& opt, const SystemDocument& doc) {
  const PartitionedSystem sys = single_mode(doc, "analyze");
  const StructuredMatrix b = hconcat(sys.b_def, sys.b_att);
  const ControllabilityReport ctrl = is_structurally_controllable(sys.a, b);
  const MinDesignReport design = min_design_report(sys.a, sys.x_def, sys.x_att);
  const BipartiteView full = bipartite_of_digraph(digraph_of(sys.a, b));
  const BipartiteView plain = bipartite_of_digraph(digraph_of(sys.a));
  json j = {{"controllability",
             controllability_json(ctrl, full, digraph_left_labels())},
            {"min_design", min_design_json(design, plain)},
            {"unmatched_sets", unmatched_sets(plain, opt.max_enumerate)}};
  emit(opt, j, render_controllability(ctrl) + render_min_design(design));
  return ctrl.controllable ? kPositive : kNegative;
}

int run_dos(const Options& opt, const SystemDocument& doc) {
  const PartitionedSystem sys = single_mode(doc, "dos");
  const Verdict v = dos_resilience(sys);
  const auto diags = dos_success_diagnostics(sys);
  const BipartiteView view = bipartite_of_digraph(digraph_of(sys.a));
  json j = verdict_json(v, view, digraph_left_labels());
  j["attack_diagnostics"] = diagnostics_json(diags);
  emit(opt, j,
       render_verdict("DoS resilience", v, view, digraph_left_labels()) +
           render_diagnostics(diags));
  return v.resilient ? kPositive : kNegative;
}

StructuredMatrix defender_closed_loop(const Options& opt,
                                      const SystemDocument& doc,
                                      const PartitionedSystem& sys) {
  const auto k_def =
      gain(opt, doc.k_def, sys.defender_inputs(), sys.state_count(), "K_def");
  return k_def ? closed_loop(sys.a, sys.b_def, *k_def) : sys.a;
}

int run_integrity(const Options& opt, const SystemDocument& doc) {
  const PartitionedSystem sys = single_mode(doc, "integrity");
  const StructuredMatrix a_def = defender_closed_loop(opt, doc, sys);
  const Verdict v = integrity_resilience(a_def, sys.x_def, sys.x_att);
  const BipartiteView view = bipartite_of_digraph(digraph_of(a_def));
  emit(opt, verdict_json(v, view, digraph_left_labels()),
       render_verdict("integrity resilience", v, view, digraph_left_labels()));
  return v.resilient ? kPositive : kNegative;
}

int run_complete_takeover(const Options& opt, const SystemDocument& doc) {
  const PartitionedSystem sys = single_mode(doc, "complete-takeover");
  const StructuredMatrix a_def = defender_closed_loop(opt, doc, sys);
  const Verdict v = attacker_complete_controllability(a_def, sys.x_def, sys.x_att);
  const BipartiteView view = bipartite_of_digraph(digraph_of(a_def));
  json j = verdict_json(v, view, digraph_left_labels());
  j["attacker_complete_control"] = !v.resilient;
  emit(opt, j,
       render_verdict("resilience to complete takeover", v, view,
                      digraph_left_labels()));
  return v.resilient ? kPositive : kNegative;
}

int run_sfi(const Options& opt, const SystemDocument& doc) {
  const PartitionedSystem sys = single_mode(doc, "sfi");
  const auto k_att =
      gain(opt, doc.k_att, sys.attacker_inputs(), sys.state_count(), "K_att");
  if (!k_att) throw InputError("sfi needs --k-att or a K_att field");
  const SfiReport r = sfi_resilience(sys, *k_att);
  emit(opt, sfi_json(r), render_sfi(r));
  return r.verdict.resilient ? kPositive : kNegative;
}

int run_switched_dos(const Options& opt, const SystemDocument& doc) {
  const Verdict v = switched_dos_resilience(doc.system);
  const UnionSystem u = build_union(doc.system, false);
  const LeftLabeler label = switched_left_labels(u.mode_count);
  emit(opt, verdict_json(v, u.concat_view, label),
       render_verdict("switched DoS resilience", v, u.concat_view, label));
  return v.resilient ? kPositive : kNegative;
}

int run_switched_controllability(const Options& opt, const SystemDocument& doc) {
  const ControllabilityReport r = switched_structural_controllability(doc.system);
  const UnionSystem u = build_union(doc.system, true);
  emit(opt,
       controllability_json(r, u.concat_view, switched_left_labels(u.mode_count)),
       render_controllability(r));
  return r.controllable ? kPositive : kNegative;
}

int run_oracle(const Options& opt, const SystemDocument& doc) {
  const PartitionedSystem sys = single_mode(doc, "oracle");
  if (opt.trials == 0) throw InputError("--trials must be positive");
  const OracleReport r = validate_structural_verdict(
      sys.a, hconcat(sys.b_def, sys.b_att), opt.trials, opt.seed);
  emit(opt, oracle_json(r), render_oracle(r));
  return r.agrees() ? kPositive : kNegative;
}

int run_export_dot(const Options& opt, const SystemDocument& doc) {
  std::vector<StateEdge> witness;
  if (opt.witness) {
    if (doc.single_mode()) {
      const PartitionedSystem sys = doc.system.mode_system(0);
      const Verdict v = dos_resilience(sys);
      if (v.matching)
        witness = matched_state_edges(*v.matching,
                                      bipartite_of_digraph(digraph_of(sys.a)));
    } else {
      const Verdict v = switched_dos_resilience(doc.system);
      const UnionSystem u = build_union(doc.system, false);
      if (v.matching)
        witness = matched_state_edges(*v.matching, u.concat_view, u.mode_count);
    }
  }
  std::cout << export_dot(doc, witness);
  return kPositive;
}

void report_document_error(const DocumentError& e) {
  for (const auto& issue : e.issues()) {
    std::cerr << "error";
    if (issue.line) std::cerr << " (line " << *issue.line << ")";
    if (!issue.path.empty()) std::cerr << " at " << issue.path;
    std::cerr << ": " << issue.message << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structural resilience analysis of partitioned linear systems"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json_out, "Print the verdict as JSON");
  app.add_option("--max-enumerate", opt.max_enumerate,
                 "Cap on enumerated maximum matchings")
      ->check(CLI::PositiveNumber);

  using Runner = int (*)(const Options&, const SystemDocument&);
  std::vector<std::pair<CLI::App*, Runner>> commands;
  auto add = [&](const char* name, const char* help, Runner run) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", opt.file, "System description (JSON)")->required();
    commands.emplace_back(sub, run);
    return sub;
  };
  add("analyze", "Structural controllability and minimal input design",
      run_analyze);
  add("dos", "DoS resilience and sufficient attack conditions", run_dos);
  add("integrity", "Integrity resilience", run_integrity)
      ->add_option("--k-def", opt.k_file, "Defender feedback pattern K_def");
  add("sfi", "Resilience to state feedback injection", run_sfi)
      ->add_option("--k-att", opt.k_file, "Attacker feedback pattern K_att");
  add("complete-takeover", "Resilience to complete attacker control",
      run_complete_takeover)
      ->add_option("--k-def", opt.k_file, "Defender feedback pattern K_def");
  add("switched-dos", "DoS resilience of a switched system", run_switched_dos);
  add("switched-controllability", "Structural controllability of a switched system",
      run_switched_controllability);
  CLI::App* oracle = add("oracle", "Check the structural verdict numerically",
                         run_oracle);
  oracle->add_option("--trials", opt.trials, "Number of realizations");
  oracle->add_option("--seed", opt.seed, "Master seed");
  add("export-dot", "Graphviz rendering with SCC clusters", run_export_dot)
      ->add_flag("--witness", opt.witness, "Highlight the DoS witness matching");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    const SystemDocument doc = parse_system(read_file(opt.file));
    for (const auto& [sub, run] : commands)
      if (sub->parsed()) return run(opt, doc);
  } catch (const DocumentError& e) {
    report_document_error(e);
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvalidPartition& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
