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

#ifndef STRUCRES_SYSTEM_HPP
#define STRUCRES_SYSTEM_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "strucres/structured_matrix.hpp"

namespace strucres {

/// Zero-based state indices.
using StateSet = std::set<std::size_t>;

/// dx = [A]x + [B_def]u_def + [B_att]u_att with the defender and attacker
/// state sets that each party's inputs may touch.
///
/// States in neither set are allowed; they are simply not directly
/// actuated by anyone.
struct PartitionedSystem {
  StructuredMatrix a;
  StructuredMatrix b_def;
  StructuredMatrix b_att;
  StateSet x_def;
  StateSet x_att;

  std::size_t state_count() const { return a.rows(); }
  std::size_t defender_inputs() const { return b_def.cols(); }
  std::size_t attacker_inputs() const { return b_att.cols(); }
  std::size_t input_count() const { return b_def.cols() + b_att.cols(); }
};

struct Mode {
  StructuredMatrix a;
  StructuredMatrix b_def;
  StructuredMatrix b_att;
};

/// A switched system: one (A_k, B_def_k, B_att_k) triple per mode, with the
/// actuated state sets shared by every mode.
struct SwitchedPartitionedSystem {
  std::vector<Mode> modes;
  StateSet x_def;
  StateSet x_att;

  std::size_t state_count() const {
    return modes.empty() ? 0 : modes.front().a.rows();
  }
  std::size_t defender_inputs() const {
    return modes.empty() ? 0 : modes.front().b_def.cols();
  }
  std::size_t attacker_inputs() const {
    return modes.empty() ? 0 : modes.front().b_att.cols();
  }

  /// Mode k as a single-mode system.
  PartitionedSystem mode_system(std::size_t k) const;
};

enum class ViolationKind {
  kShape,                  // a not square or a block with the wrong row count
  kModeShape,              // a mode disagrees with mode 0 on n, d or a
  kNoModes,
  kStateOutOfRange,        // x_def/x_att names a state >= n
  kDisjointness,           // state in both x_def and x_att
  kDefenderRowConstraint,  // B_def star in a row outside x_def
  kAttackerRowConstraint,  // B_att star in a row outside x_att
};

struct PartitionViolation {
  ViolationKind kind;
  std::size_t index = 0;  // offending state/row (zero-based) where relevant
  std::optional<std::size_t> mode;
  std::string message;

  friend bool operator==(const PartitionViolation& lhs,
                         const PartitionViolation& rhs) {
    return lhs.kind == rhs.kind && lhs.index == rhs.index &&
           lhs.mode == rhs.mode;
  }
};

/// Empty iff every invariant of PartitionedSystem holds.
std::vector<PartitionViolation> validate_partition(
    const PartitionedSystem& sys);

std::vector<PartitionViolation> validate_partition(
    const SwitchedPartitionedSystem& sys);

/// Thrown by analyses whose precondition is a valid partition.
class InvalidPartition : public std::invalid_argument {
 public:
  explicit InvalidPartition(std::vector<PartitionViolation> violations);
  const std::vector<PartitionViolation>& violations() const {
    return violations_;
  }

 private:
  std::vector<PartitionViolation> violations_;
};

std::vector<bool> membership_mask(const StateSet& states, std::size_t n);

/// Concatenates column blocks with equal row counts.
StructuredMatrix hconcat(const StructuredMatrix& lhs,
                         const StructuredMatrix& rhs);

}  // namespace strucres

#endif  // STRUCRES_SYSTEM_HPP
