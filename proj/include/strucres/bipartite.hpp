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

#ifndef STRUCRES_BIPARTITE_HPP
#define STRUCRES_BIPARTITE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "strucres/digraph.hpp"
#include "strucres/structured_matrix.hpp"

namespace strucres {

/// Where a left vertex came from: column `column` of block `block`. For
/// views built from a digraph, block 0 holds the state columns and block 1
/// the input columns.
struct LeftOrigin {
  std::size_t block = 0;
  std::size_t column = 0;

  friend auto operator<=>(const LeftOrigin&, const LeftOrigin&) = default;
};

/// Bipartite graph with edges directed left -> right. Right vertex r is
/// always state x_r.
class BipartiteView {
 public:
  BipartiteView() = default;
  explicit BipartiteView(std::size_t right_count);

  std::size_t add_left(LeftOrigin origin);
  void add_edge(std::size_t left, std::size_t right);

  std::size_t left_count() const { return origins_.size(); }
  std::size_t right_count() const { return right_count_; }
  std::size_t edge_count() const { return edge_count_; }

  /// Sorted right neighbours of a left vertex.
  const std::vector<std::size_t>& neighbors(std::size_t left) const {
    return adj_[left];
  }
  bool has_edge(std::size_t left, std::size_t right) const;
  const LeftOrigin& origin(std::size_t left) const { return origins_[left]; }

  /// In-degree of a right vertex.
  std::size_t right_degree(std::size_t right) const;

  friend bool operator==(const BipartiteView&, const BipartiteView&) = default;

 private:
  std::size_t right_count_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<LeftOrigin> origins_;
  std::vector<std::vector<std::size_t>> adj_;
};

/// B(D): left vertex s_j per state (block 0) then one per input (block 1);
/// edge s_j -> w_i for every edge v_j -> x_i.
BipartiteView bipartite_of_digraph(const Digraph& g);

/// B([M_1, ..., M_k]): every column of every block becomes its own left
/// vertex; edge (column c of block k) -> w_r for every star (r, c).
BipartiteView bipartite_of_blocks(std::span<const StructuredMatrix> blocks);

}  // namespace strucres

#endif  // STRUCRES_BIPARTITE_HPP
