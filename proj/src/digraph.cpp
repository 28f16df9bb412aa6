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

#include "strucres/digraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace strucres {

namespace {

bool sorted_insert(std::vector<std::size_t>& v, std::size_t x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it != v.end() && *it == x) return false;
  v.insert(it, x);
  return true;
}

}  // namespace

Digraph::Digraph(std::size_t states, std::size_t inputs)
    : states_(states),
      inputs_(inputs),
      out_(states + inputs),
      in_(states + inputs) {}

void Digraph::add_state_edge(std::size_t from, std::size_t to) {
  if (from >= states_ || to >= states_)
    throw std::out_of_range("add_state_edge: state index out of range");
  insert_edge(from, to);
}

void Digraph::add_input_edge(std::size_t input, std::size_t to) {
  if (input >= inputs_ || to >= states_)
    throw std::out_of_range("add_input_edge: index out of range");
  insert_edge(input_vertex(input), to);
}

void Digraph::insert_edge(std::size_t from, std::size_t to) {
  if (sorted_insert(out_[from], to)) {
    sorted_insert(in_[to], from);
    ++edge_count_;
  }
}

std::vector<std::pair<std::size_t, std::size_t>> Digraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edge_count_);
  for (std::size_t v = 0; v < out_.size(); ++v)
    for (std::size_t w : out_[v]) out.emplace_back(v, w);
  return out;
}

Digraph digraph_of(const StructuredMatrix& a,
                   const std::optional<StructuredMatrix>& b) {
  if (!a.is_square())
    throw DimensionError("digraph_of: system pattern must be square");
  if (b && b->rows() != a.rows())
    throw DimensionError("digraph_of: input pattern row count differs from n");
  Digraph g(a.rows(), b ? b->cols() : 0);
  for (const Star& s : a.stars()) g.add_state_edge(s.col, s.row);
  if (b)
    for (const Star& s : b->stars()) g.add_input_edge(s.col, s.row);
  return g;
}

std::vector<std::size_t> reachable_from(
    const Digraph& g, const std::vector<std::size_t>& sources) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<std::size_t> stack;
  for (std::size_t s : sources) {
    if (s >= g.vertex_count())
      throw std::out_of_range("reachable_from: source outside graph");
    if (!seen[s]) {
      seen[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : g.successors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < seen.size(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

}  // namespace strucres
