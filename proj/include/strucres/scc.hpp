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

#ifndef STRUCRES_SCC_HPP
#define STRUCRES_SCC_HPP

#include <cstddef>
#include <vector>

#include "strucres/digraph.hpp"

namespace strucres {

/// Strongly connected components of the state subgraph of a Digraph.
/// Input vertices never belong to a component.
///
/// Components are numbered by their smallest state, so the decomposition of
/// a given graph is unique.
struct SccDecomposition {
  /// Sorted member states of each component.
  std::vector<std::vector<std::size_t>> components;
  /// Component index of every state.
  std::vector<std::size_t> component_of;
  /// Sorted successor components in the condensation DAG.
  std::vector<std::vector<std::size_t>> condensation;
  /// True for components with no in-edge from another component (source
  /// components of the condensation).
  std::vector<bool> non_top_linked;

  std::size_t size() const { return components.size(); }
  std::vector<std::size_t> non_top_linked_components() const;
};

/// Tarjan's algorithm over the states of g.
SccDecomposition scc_decomposition(const Digraph& g);

}  // namespace strucres

#endif  // STRUCRES_SCC_HPP
