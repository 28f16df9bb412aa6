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

#ifndef STRUCRES_DIGRAPH_HPP
#define STRUCRES_DIGRAPH_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "strucres/structured_matrix.hpp"

namespace strucres {

/// Directed graph D([A],[B]). Vertices 0..n-1 are the states x_1..x_n;
/// vertices n..n+p-1 are the inputs u_1..u_p. Inputs only have out-edges,
/// and only into states.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::size_t states, std::size_t inputs);

  std::size_t state_count() const { return states_; }
  std::size_t input_count() const { return inputs_; }
  std::size_t vertex_count() const { return states_ + inputs_; }

  bool is_input(std::size_t v) const { return v >= states_; }
  std::size_t input_vertex(std::size_t input) const { return states_ + input; }

  /// Edge x_from -> x_to. Duplicate edges are ignored.
  void add_state_edge(std::size_t from, std::size_t to);
  /// Edge u_input -> x_to.
  void add_input_edge(std::size_t input, std::size_t to);

  /// Sorted out-neighbours of any vertex.
  const std::vector<std::size_t>& successors(std::size_t v) const {
    return out_[v];
  }
  /// Sorted in-neighbours (states and inputs) of a state.
  const std::vector<std::size_t>& predecessors(std::size_t v) const {
    return in_[v];
  }

  std::size_t edge_count() const { return edge_count_; }
  /// All edges (from, to) in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  void insert_edge(std::size_t from, std::size_t to);

  std::size_t states_ = 0;
  std::size_t inputs_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

/// x_j -> x_i for every star (i,j) of a; u_j -> x_i for every star (i,j)
/// of b.
Digraph digraph_of(const StructuredMatrix& a,
                   const std::optional<StructuredMatrix>& b = std::nullopt);

/// Vertices reachable from `sources` by directed paths, sources included.
/// Returned as a sorted list.
std::vector<std::size_t> reachable_from(const Digraph& g,
                                        const std::vector<std::size_t>& sources);

}  // namespace strucres

#endif  // STRUCRES_DIGRAPH_HPP
