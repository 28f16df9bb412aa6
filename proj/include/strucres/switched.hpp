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

#ifndef STRUCRES_SWITCHED_HPP
#define STRUCRES_SWITCHED_HPP

#include <cstddef>

#include "strucres/bipartite.hpp"
#include "strucres/resilience.hpp"
#include "strucres/structured_matrix.hpp"
#include "strucres/system.hpp"

namespace strucres {

/// Union-graph view of a switched system.
struct UnionSystem {
  StructuredMatrix union_a;      // A_1 + ... + A_z
  StructuredMatrix union_b_def;  // B_def_1 + ... + B_def_z
  StructuredMatrix union_b_att;  // zero when attacker blocks are excluded
  /// B([A_1, ..., A_z, B_def_1, ..., B_def_z (, B_att_1, ..., B_att_z)]).
  /// Block k < z is A_{k+1}; then the defender blocks; then the attacker
  /// blocks when included.
  BipartiteView concat_view;
  std::size_t mode_count = 0;
};

/// Throws InvalidPartition when the modes disagree on shape.
UnionSystem build_union(const SwitchedPartitionedSystem& sys,
                        bool include_attacker);

/// Structural controllability of the switched system with all of its
/// inputs (defender and attacker): every source component of D(ΣA_k) gets
/// an input edge in D(ΣA_k, ΣB_k) and the concatenated view has a size-n
/// matching. `matching` in the report lives in the concatenated view.
ControllabilityReport switched_structural_controllability(
    const SwitchedPartitionedSystem& sys);

/// DoS resilience of a switched system (attacker inputs removed in every
/// mode). Defender input j is one actuator across all modes. The witness
/// matching lives in B([A_1, ..., A_z]).
Verdict switched_dos_resilience(const SwitchedPartitionedSystem& sys);

}  // namespace strucres

#endif  // STRUCRES_SWITCHED_HPP
