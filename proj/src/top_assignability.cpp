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

#include "strucres/top_assignability.hpp"

#include "strucres/digraph.hpp"

namespace strucres {

std::vector<std::size_t> top_assignable_components(const SccDecomposition& scc,
                                                   const Matching& m) {
  std::vector<bool> hit(scc.size(), false);
  for (std::size_t r : m.right_unmatched())
    if (scc.non_top_linked[scc.component_of[r]]) hit[scc.component_of[r]] = true;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < hit.size(); ++c)
    if (hit[c]) out.push_back(c);
  return out;
}

TopAssignability max_top_assignability_index(const BipartiteView& view,
                                             const SccDecomposition& scc) {
  if (view.right_count() != scc.component_of.size())
    throw DimensionError("max_top_assignability_index: view and SCCs differ");

  BipartiteView extended = view;
  const std::size_t base = view.left_count();
  const std::vector<std::size_t> sources = scc.non_top_linked_components();
  for (std::size_t i = 0; i < sources.size(); ++i) {
    std::size_t left = extended.add_left({kUnmatched, sources[i]});
    for (std::size_t state : scc.components[sources[i]])
      extended.add_edge(left, state);
  }

  const Matching inner = maximum_matching(view);
  Matching lifted(extended.left_count(), extended.right_count());
  for (auto [l, r] : inner.edges()) lifted.add(l, r);
  const Matching grown = maximum_matching(extended, std::move(lifted));

  TopAssignability out;
  out.witness = Matching(view.left_count(), view.right_count());
  for (auto [l, r] : grown.edges()) {
    if (l < base)
      out.witness.add(l, r);
    else
      ++out.alpha;
  }
  out.top_assignable = top_assignable_components(scc, out.witness);
  return out;
}

TopAssignability max_top_assignability_index(const StructuredMatrix& a) {
  const Digraph g = digraph_of(a);
  return max_top_assignability_index(bipartite_of_digraph(g),
                                     scc_decomposition(g));
}

}  // namespace strucres
