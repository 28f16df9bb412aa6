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

#ifndef STRUCRES_DOT_EXPORT_HPP
#define STRUCRES_DOT_EXPORT_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "strucres/bipartite.hpp"
#include "strucres/document.hpp"
#include "strucres/matching.hpp"

namespace strucres {

/// State edge x_from -> x_to to highlight (0-based).
using StateEdge = std::pair<std::size_t, std::size_t>;

/// State edges used by a matching. Blocks below `state_blocks` hold state
/// columns (1 for digraph views, the mode count for concatenated views);
/// other left vertices are skipped.
std::vector<StateEdge> matched_state_edges(const Matching& m,
                                           const BipartiteView& view,
                                           std::size_t state_blocks = 1);

/// Graphviz DOT text for the union state graph of `doc`, one cluster per
/// SCC. Output depends only on the arguments.
std::string export_dot(const SystemDocument& doc,
                       const std::vector<StateEdge>& witness = {});

}  // namespace strucres

#endif  // STRUCRES_DOT_EXPORT_HPP
