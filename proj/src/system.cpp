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

#include "strucres/system.hpp"

#include <sstream>

namespace strucres {

namespace {

std::string describe(const std::vector<PartitionViolation>& violations) {
  std::string out = "invalid partition:";
  for (const auto& v : violations) out += " " + v.message + ";";
  return out;
}

void check_mode(const Mode& mode, std::size_t n, const StateSet& x_def,
                const StateSet& x_att, std::optional<std::size_t> mode_index,
                std::vector<PartitionViolation>& out) {
  std::string where =
      mode_index ? "mode " + std::to_string(*mode_index + 1) + ": " : "";
  if (!mode.a.is_square() || mode.a.rows() != n) {
    out.push_back({ViolationKind::kShape, 0, mode_index,
                   where + "A must be " + std::to_string(n) + "x" +
                       std::to_string(n)});
    return;
  }
  if (mode.b_def.rows() != n) {
    out.push_back({ViolationKind::kShape, 0, mode_index,
                   where + "B_def must have " + std::to_string(n) + " rows"});
  } else {
    for (std::size_t r : mode.b_def.star_rows()) {
      if (!x_def.contains(r)) {
        out.push_back({ViolationKind::kDefenderRowConstraint, r, mode_index,
                       where + "B_def drives state " + std::to_string(r + 1) +
                           " which is not in x_def"});
      }
    }
  }
  if (mode.b_att.rows() != n) {
    out.push_back({ViolationKind::kShape, 0, mode_index,
                   where + "B_att must have " + std::to_string(n) + " rows"});
  } else {
    for (std::size_t r : mode.b_att.star_rows()) {
      if (!x_att.contains(r)) {
        out.push_back({ViolationKind::kAttackerRowConstraint, r, mode_index,
                       where + "B_att drives state " + std::to_string(r + 1) +
                           " which is not in x_att"});
      }
    }
  }
}

void check_sets(const StateSet& x_def, const StateSet& x_att, std::size_t n,
                std::vector<PartitionViolation>& out) {
  for (std::size_t s : x_def)
    if (s >= n)
      out.push_back({ViolationKind::kStateOutOfRange, s, std::nullopt,
                     "x_def names state " + std::to_string(s + 1) +
                         " but n = " + std::to_string(n)});
  for (std::size_t s : x_att)
    if (s >= n)
      out.push_back({ViolationKind::kStateOutOfRange, s, std::nullopt,
                     "x_att names state " + std::to_string(s + 1) +
                         " but n = " + std::to_string(n)});
  for (std::size_t s : x_def)
    if (x_att.contains(s))
      out.push_back({ViolationKind::kDisjointness, s, std::nullopt,
                     "state " + std::to_string(s + 1) +
                         " is in both x_def and x_att"});
}

}  // namespace

PartitionedSystem SwitchedPartitionedSystem::mode_system(std::size_t k) const {
  const Mode& m = modes.at(k);
  return {m.a, m.b_def, m.b_att, x_def, x_att};
}

InvalidPartition::InvalidPartition(std::vector<PartitionViolation> violations)
    : std::invalid_argument(describe(violations)),
      violations_(std::move(violations)) {}

std::vector<PartitionViolation> validate_partition(
    const PartitionedSystem& sys) {
  std::vector<PartitionViolation> out;
  const std::size_t n = sys.a.rows();
  check_sets(sys.x_def, sys.x_att, n, out);
  check_mode({sys.a, sys.b_def, sys.b_att}, n, sys.x_def, sys.x_att,
             std::nullopt, out);
  return out;
}

std::vector<PartitionViolation> validate_partition(
    const SwitchedPartitionedSystem& sys) {
  std::vector<PartitionViolation> out;
  if (sys.modes.empty()) {
    out.push_back({ViolationKind::kNoModes, 0, std::nullopt,
                   "a switched system needs at least one mode"});
    return out;
  }
  const std::size_t n = sys.state_count();
  const std::size_t d = sys.defender_inputs();
  const std::size_t a = sys.attacker_inputs();
  check_sets(sys.x_def, sys.x_att, n, out);
  for (std::size_t k = 0; k < sys.modes.size(); ++k) {
    const Mode& mode = sys.modes[k];
    if (mode.a.rows() != n) {
      out.push_back({ViolationKind::kModeShape, 0, k,
                     "mode " + std::to_string(k + 1) +
                         ": state count differs from mode 1"});
    }
    if (mode.b_def.cols() != d || mode.b_att.cols() != a) {
      out.push_back({ViolationKind::kModeShape, 0, k,
                     "mode " + std::to_string(k + 1) +
                         ": input counts differ from mode 1"});
    }
    check_mode(mode, n, sys.x_def, sys.x_att, k, out);
  }
  return out;
}

std::vector<bool> membership_mask(const StateSet& states, std::size_t n) {
  std::vector<bool> mask(n, false);
  for (std::size_t s : states)
    if (s < n) mask[s] = true;
  return mask;
}

StructuredMatrix hconcat(const StructuredMatrix& lhs,
                         const StructuredMatrix& rhs) {
  if (lhs.rows() != rhs.rows()) {
    std::ostringstream msg;
    msg << "hconcat: " << lhs.rows() << " rows vs " << rhs.rows();
    throw DimensionError(msg.str());
  }
  StructuredMatrix out(lhs.rows(), lhs.cols() + rhs.cols());
  for (const Star& s : lhs.stars()) out.add_star(s.row, s.col);
  for (const Star& s : rhs.stars()) out.add_star(s.row, lhs.cols() + s.col);
  return out;
}

}  // namespace strucres
