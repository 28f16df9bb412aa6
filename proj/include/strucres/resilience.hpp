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

#ifndef STRUCRES_RESILIENCE_HPP
#define STRUCRES_RESILIENCE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strucres/matching.hpp"
#include "strucres/structured_matrix.hpp"
#include "strucres/system.hpp"

namespace strucres {

/// Machine-readable reasons attached to verdicts and diagnostics. Each one
/// names a single clause of a resilience criterion.
enum class Condition {
  // DoS resilience / switched DoS resilience
  kNotStructurallyControllable,
  kAttackerStateAlwaysUnmatched,
  kAttackerOnlySourceComponent,
  kDefenderInputsBelowUnmatched,
  kUnmatchedWithoutDedicatedInput,
  kSourceComponentWithoutDefenderInput,
  // sufficient conditions for a successful DoS attack
  kInputBudgetWithoutDefenderInputs,
  kLinkBudgetWithoutDefenderInputs,
  kStateUnreachableFromDefender,
  kNoDefenderPathCycleCover,
  kDefenderLinkDeficit,
  // integrity
  kAttackerAvoidsDefenderStates,
  kNoDefenderOnlySourceComponent,
  kAttackerCompleteControl,
};

/// Stable identifier, e.g. "dos.attacker_only_source_component".
std::string_view condition_code(Condition c);
/// One-line human description.
std::string_view condition_summary(Condition c);

struct ControllabilityReport {
  bool controllable = false;
  std::vector<std::size_t> unreachable_states;
  std::vector<std::size_t> right_unmatched_after_inputs;
  std::vector<std::vector<std::size_t>> uncovered_non_top_linked_sccs;
  /// Maximum matching of B([A],[B]) the unmatched set was read from.
  Matching matching;
};

struct Verdict {
  bool resilient = true;
  std::vector<Condition> violated;
  /// Witness matching; the view it lives in is stated by the producing
  /// operation.
  std::optional<Matching> matching;
  /// Witness components (sorted state lists).
  std::vector<std::vector<std::size_t>> components;
  /// Witness states.
  std::vector<std::size_t> states;

  void violate(Condition c);
};

/// m, beta and alpha of D([A]) / B([A]).
struct StructuralCounts {
  std::size_t m = 0;
  std::size_t beta = 0;
  std::size_t alpha = 0;

  std::size_t min_inputs() const { return m == 0 ? 1 : m; }
  std::size_t min_links() const { return m + beta - alpha; }

  friend bool operator==(const StructuralCounts&,
                         const StructuralCounts&) = default;
};

StructuralCounts structural_counts(const StructuredMatrix& a);

struct MinDesignReport {
  std::size_t m = 0;
  std::size_t beta = 0;
  std::size_t alpha = 0;
  std::size_t min_inputs = 0;
  std::size_t min_links = 0;
  /// Unmatched states of `witness` in x_def, x_att, and in neither set.
  std::size_t m_def = 0;
  std::size_t m_att = 0;
  std::size_t m_unassigned = 0;
  /// Alpha-achieving maximum matching of B([A]).
  Matching witness;
};

struct DosDiagnostic {
  Condition clause;
  std::vector<std::size_t> states;
  std::vector<std::vector<std::size_t>> components;
};

/// Reachability from the inputs in D([A],[B]) plus a size-n matching of
/// B([A],[B]). Throws DimensionError on shape mismatch.
ControllabilityReport is_structurally_controllable(const StructuredMatrix& a,
                                                   const StructuredMatrix& b);

MinDesignReport min_design_report(const StructuredMatrix& a,
                                  const StateSet& x_def, const StateSet& x_att);

/// Fewest x_def states left unmatched by any maximum matching of B([A]).
std::size_t min_defender_unmatched(const StructuredMatrix& a,
                                   const StateSet& x_def);

/// Evaluates every sufficient condition for a DoS attack to succeed and
/// returns the ones that fire. Throws InvalidPartition.
std::vector<DosDiagnostic> dos_success_diagnostics(const PartitionedSystem& sys);

/// Resilient iff ([A],[B_def]) is structurally controllable, some maximum
/// matching of B([A]) covers every attacker state, and no source component
/// of D([A]) lies inside x_att. The witness matching lives in B([A]).
/// Throws InvalidPartition.
Verdict dos_resilience(const PartitionedSystem& sys);

/// Resilient iff every maximum matching of B([A_def]) leaves an x_def state
/// unmatched, or some source component of D([A_def]) lies inside x_def.
Verdict integrity_resilience(const StructuredMatrix& a_def,
                             const StateSet& x_def, const StateSet& x_att);

/// `resilient` is false exactly when the attacker alone can make
/// ([A_def],[B_att]) structurally controllable: some maximum matching of
/// B([A_def]) leaves only x_att states unmatched and every source component
/// lies inside x_att.
Verdict attacker_complete_controllability(const StructuredMatrix& a_def,
                                          const StateSet& x_def,
                                          const StateSet& x_att);

struct SfiReport {
  Verdict verdict;
  StructuredMatrix a_att;
  /// Defender pattern certifying the verdict; Z(b_def_prime) ⊆ Z(b_def).
  StructuredMatrix b_def_prime;
  std::vector<Star> added_links;
  StructuralCounts before;  // of [A]
  StructuralCounts after;   // of [A_att]
  /// m + beta - alpha did not grow under the feedback.
  bool link_budget_holds = false;
  bool reused_b_def = false;
  /// The input system was DoS resilient with its own B_def.
  bool dos_resilient_before = false;
  std::vector<std::string> repair_notes;
};

/// Forms [A_att] = [A] + [B_att][K_att] and finds a defender pattern
/// keeping the closed loop DoS resilient, reusing B_def when it already
/// suffices and otherwise adding links from existing defender columns.
SfiReport sfi_resilience(const PartitionedSystem& sys,
                         const StructuredMatrix& k_att);

}  // namespace strucres

#endif  // STRUCRES_RESILIENCE_HPP
