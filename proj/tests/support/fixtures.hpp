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

// Canonical systems shared by the unit and acceptance tests. Star lists
// are written 1-based, as in the file format.

#ifndef STRUCRES_TESTS_FIXTURES_HPP
#define STRUCRES_TESTS_FIXTURES_HPP

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "strucres/structured_matrix.hpp"
#include "strucres/system.hpp"

namespace strucres::fixtures {

inline StructuredMatrix pattern(std::size_t rows, std::size_t cols,
                                std::initializer_list<std::pair<int, int>> one_based) {
  StructuredMatrix m(rows, cols);
  for (auto [r, c] : one_based)
    m.add_star(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1));
  return m;
}

inline StateSet states(std::initializer_list<int> one_based) {
  StateSet s;
  for (int v : one_based) s.insert(static_cast<std::size_t>(v - 1));
  return s;
}

inline std::vector<std::size_t> list(std::initializer_list<int> one_based) {
  std::vector<std::size_t> out;
  for (int v : one_based) out.push_back(static_cast<std::size_t>(v - 1));
  return out;
}

// Seven-state example with two source components, {x1,x2,x3} and {x5}.
inline StructuredMatrix ex1() {
  return pattern(7, 7, {{1, 3}, {2, 1}, {3, 2}, {4, 2}, {6, 4}, {6, 7}, {7, 5}, {7, 6}});
}
inline StructuredMatrix ex1a() {
  return pattern(7, 7, {{1, 3}, {2, 1}, {7, 5}, {7, 6}});
}
inline StructuredMatrix ex1b() {
  return pattern(7, 7, {{3, 2}, {4, 2}, {6, 4}, {6, 7}});
}

// Ten-state family: cycle x1..x3 feeding the ring x4..x7, attacker-side
// x8 feeding x7 and the pair x9,x10. The ring is entered from x2.
inline StructuredMatrix ex2a() {
  return pattern(10, 10, {{2, 1}, {3, 2}, {1, 3}, {4, 2}, {5, 4}, {6, 5},
                          {7, 6}, {4, 7}, {7, 8}, {9, 8}, {10, 9}, {9, 10}});
}
// ex2a plus x7 -> x8.
inline StructuredMatrix ex2b() {
  StructuredMatrix a = ex2a();
  a.add_star(7, 6);
  return a;
}
// ex2b without x6 -> x7.
inline StructuredMatrix ex2c() {
  return pattern(10, 10, {{2, 1}, {3, 2}, {1, 3}, {4, 2}, {5, 4}, {6, 5},
                          {4, 7}, {7, 8}, {9, 8}, {10, 9}, {9, 10}, {8, 7}});
}
// ex2a plus x9 -> x1: the only source component left is {x8}.
inline StructuredMatrix ex2_takeover() {
  StructuredMatrix a = ex2a();
  a.add_star(0, 8);
  return a;
}

inline StructuredMatrix f1_b_def() { return pattern(7, 2, {{3, 1}, {5, 2}}); }

inline PartitionedSystem f1() {
  return {ex1(), f1_b_def(), StructuredMatrix(7, 0), states({1, 2, 3, 5}),
          states({4, 6, 7})};
}

inline StateSet f2_def() { return states({1, 2, 3, 4, 5, 6}); }
inline StateSet f2_att() { return states({7, 8, 9, 10}); }
inline StructuredMatrix ex2_b_def() { return pattern(10, 1, {{3, 1}}); }
inline StructuredMatrix ex2_b_att() { return pattern(10, 1, {{8, 1}}); }
inline StructuredMatrix ex2_k_att() { return pattern(1, 10, {{1, 7}}); }

inline PartitionedSystem ex2_system(const StructuredMatrix& a) {
  return {a, ex2_b_def(), ex2_b_att(), f2_def(), f2_att()};
}

}  // namespace strucres::fixtures

#endif  // STRUCRES_TESTS_FIXTURES_HPP
