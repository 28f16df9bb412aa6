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

#include "strucres/bipartite.hpp"

#include <algorithm>
#include <stdexcept>

namespace strucres {

BipartiteView::BipartiteView(std::size_t right_count)
    : right_count_(right_count) {}

std::size_t BipartiteView::add_left(LeftOrigin origin) {
  origins_.push_back(origin);
  adj_.emplace_back();
  return origins_.size() - 1;
}

void BipartiteView::add_edge(std::size_t left, std::size_t right) {
  if (left >= left_count() || right >= right_count_)
    throw std::out_of_range("BipartiteView::add_edge: vertex out of range");
  auto& nbrs = adj_[left];
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), right);
  if (it != nbrs.end() && *it == right) return;
  nbrs.insert(it, right);
  ++edge_count_;
}

bool BipartiteView::has_edge(std::size_t left, std::size_t right) const {
  const auto& nbrs = adj_[left];
  return std::binary_search(nbrs.begin(), nbrs.end(), right);
}

std::size_t BipartiteView::right_degree(std::size_t right) const {
  std::size_t deg = 0;
  for (const auto& nbrs : adj_)
    if (std::binary_search(nbrs.begin(), nbrs.end(), right)) ++deg;
  return deg;
}

BipartiteView bipartite_of_digraph(const Digraph& g) {
  BipartiteView view(g.state_count());
  for (std::size_t j = 0; j < g.state_count(); ++j) view.add_left({0, j});
  for (std::size_t j = 0; j < g.input_count(); ++j) view.add_left({1, j});
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    for (std::size_t w : g.successors(v)) view.add_edge(v, w);
  return view;
}

BipartiteView bipartite_of_blocks(std::span<const StructuredMatrix> blocks) {
  if (blocks.empty()) return BipartiteView(0);
  const std::size_t n = blocks.front().rows();
  BipartiteView view(n);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const StructuredMatrix& block = blocks[k];
    if (block.rows() != n)
      throw DimensionError("bipartite_of_blocks: block " + std::to_string(k) +
                           " has " + std::to_string(block.rows()) +
                           " rows, expected " + std::to_string(n));
    const std::size_t first = view.left_count();
    for (std::size_t c = 0; c < block.cols(); ++c) view.add_left({k, c});
    for (const Star& s : block.stars()) view.add_edge(first + s.col, s.row);
  }
  return view;
}

}  // namespace strucres
