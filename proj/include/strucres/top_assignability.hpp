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

#ifndef STRUCRES_TOP_ASSIGNABILITY_HPP
#define STRUCRES_TOP_ASSIGNABILITY_HPP

#include <cstddef>
#include <vector>

#include "strucres/bipartite.hpp"
#include "strucres/matching.hpp"
#include "strucres/scc.hpp"
#include "strucres/structured_matrix.hpp"

namespace strucres {

struct TopAssignability {
  /// Maximum number of top assignable components over all maximum matchings
  /// of B([A]).
  std::size_t alpha = 0;
  /// A maximum matching of B([A]) achieving alpha.
  Matching witness;
  /// Components (indices into the decomposition) that are top assignable
  /// under `witness`.
  std::vector<std::size_t> top_assignable;
};

/// Non-top-linked components holding at least one right vertex that m
/// leaves unmatched.
std::vector<std::size_t> top_assignable_components(const SccDecomposition& scc,
                                                   const Matching& m);

/// Exact alpha in polynomial time.
///
/// Adds one extra left vertex per non-top-linked component, adjacent to the
/// component's states, and augments a maximum matching of B([A]) in that
/// larger graph. Augmentation never unmatches a left vertex, so the
/// B([A]) part stays maximum while each extra vertex claims an unmatched
/// state in a distinct source component; the number claimed is alpha.
TopAssignability max_top_assignability_index(const StructuredMatrix& a);

/// Same, over a precomputed B([A]) (block-0 lefts are the state columns)
/// and decomposition of D([A]).
TopAssignability max_top_assignability_index(const BipartiteView& view,
                                             const SccDecomposition& scc);

}  // namespace strucres

#endif  // STRUCRES_TOP_ASSIGNABILITY_HPP
