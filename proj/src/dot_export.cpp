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

#include "strucres/dot_export.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "strucres/digraph.hpp"
#include "strucres/scc.hpp"
#include "strucres/switched.hpp"

namespace strucres {

std::vector<StateEdge> matched_state_edges(const Matching& m,
                                           const BipartiteView& view,
                                           std::size_t state_blocks) {
  std::vector<StateEdge> out;
  for (auto [l, r] : m.edges()) {
    const LeftOrigin& o = view.origin(l);
    if (o.block >= state_blocks) continue;
    out.emplace_back(o.column, r);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string export_dot(const SystemDocument& doc,
                       const std::vector<StateEdge>& witness) {
  const SwitchedPartitionedSystem& sys = doc.system;
  const UnionSystem u = build_union(sys, true);
  const std::size_t n = sys.state_count();
  const Digraph g = digraph_of(u.union_a);
  const SccDecomposition scc = scc_decomposition(g);
  const std::set<StateEdge> bold(witness.begin(), witness.end());

  std::ostringstream out;
  out << "digraph system {\n"
      << "  rankdir=LR;\n"
      << "  node [shape=circle, style=filled, fillcolor=white];\n";

  for (std::size_t c = 0; c < scc.size(); ++c) {
    const bool ntl = scc.non_top_linked[c];
    out << "  subgraph cluster_" << c + 1 << " {\n"
        << "    label=\"" << (ntl ? "non-top-linked SCC " : "SCC ") << c + 1
        << "\";\n"
        << "    style=" << (ntl ? "\"dashed,bold\"" : "dotted")
        << "; color=" << (ntl ? "red" : "gray40") << ";\n";
    for (std::size_t s : scc.components[c]) {
      const char* fill = sys.x_def.count(s)   ? "lightblue"
                         : sys.x_att.count(s) ? "salmon"
                                              : "white";
      out << "    x" << s + 1 << " [label=\"x" << s + 1 << "\", fillcolor="
          << fill << "];\n";
    }
    out << "  }\n";
  }

  for (std::size_t j = 0; j < u.union_b_def.cols(); ++j)
    out << "  ud" << j + 1 << " [shape=box, label=\"u_def" << j + 1
        << "\", fillcolor=lightblue];\n";
  for (std::size_t j = 0; j < u.union_b_att.cols(); ++j)
    out << "  ua" << j + 1 << " [shape=box, label=\"u_att" << j + 1
        << "\", fillcolor=salmon];\n";

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : g.predecessors(i)) {
      out << "  x" << j + 1 << " -> x" << i + 1;
      if (bold.count({j, i})) out << " [style=bold, penwidth=3]";
      out << ";\n";
    }
  }
  for (const Star& s : u.union_b_def.stars())
    out << "  ud" << s.col + 1 << " -> x" << s.row + 1 << ";\n";
  for (const Star& s : u.union_b_att.stars())
    out << "  ua" << s.col + 1 << " -> x" << s.row + 1
        << " [color=red];\n";
  out << "}\n";
  return out.str();
}

}  // namespace strucres
