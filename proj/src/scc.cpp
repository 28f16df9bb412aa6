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

#include "strucres/scc.hpp"

#include <algorithm>
#include <limits>

namespace strucres {

namespace {

constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

// Iterative Tarjan. Returns the raw component id of every state, in the
// order components were completed.
std::vector<std::size_t> tarjan(const Digraph& g, std::size_t& count) {
  const std::size_t n = g.state_count();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0), comp(n, kUnvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  // (vertex, position in its successor list)
  std::vector<std::pair<std::size_t, std::size_t>> call;
  std::size_t next_index = 0;
  count = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call.empty()) {
      auto& [v, pos] = call.back();
      const auto& succ = g.successors(v);
      if (pos < succ.size()) {
        std::size_t w = succ[pos++];
        if (g.is_input(w)) continue;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      std::size_t done = v;
      call.pop_back();
      if (!call.empty()) {
        std::size_t parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = count;
        } while (w != done);
        ++count;
      }
    }
  }
  return comp;
}

}  // namespace

std::vector<std::size_t> SccDecomposition::non_top_linked_components() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < non_top_linked.size(); ++c)
    if (non_top_linked[c]) out.push_back(c);
  return out;
}

SccDecomposition scc_decomposition(const Digraph& g) {
  const std::size_t n = g.state_count();
  std::size_t raw_count = 0;
  std::vector<std::size_t> raw = tarjan(g, raw_count);

  // Renumber by smallest member: scanning states in order assigns ids in
  // order of first appearance.
  std::vector<std::size_t> relabel(raw_count, kUnvisited);
  SccDecomposition out;
  out.component_of.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t& id = relabel[raw[v]];
    if (id == kUnvisited) {
      id = out.components.size();
      out.components.emplace_back();
    }
    out.component_of[v] = id;
    out.components[id].push_back(v);
  }

  const std::size_t k = out.components.size();
  out.condensation.assign(k, {});
  out.non_top_linked.assign(k, true);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w : g.successors(v)) {
      if (g.is_input(w)) continue;
      std::size_t cv = out.component_of[v];
      std::size_t cw = out.component_of[w];
      if (cv == cw) continue;
      out.condensation[cv].push_back(cw);
      out.non_top_linked[cw] = false;
    }
  }
  for (auto& succ : out.condensation) {
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
  }
  return out;
}

}  // namespace strucres
