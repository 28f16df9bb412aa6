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

#ifndef STRUCRES_STRUCTURED_MATRIX_HPP
#define STRUCRES_STRUCTURED_MATRIX_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace strucres {

/// Thrown when two patterns (or a pattern and a graph) have incompatible
/// shapes for the requested operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Position of a free parameter. Zero-based inside the library; the file
/// format and CLI use one-based indices.
struct Star {
  std::size_t row = 0;
  std::size_t col = 0;

  friend auto operator<=>(const Star&, const Star&) = default;
};

/// A zero pattern: every entry is either a fixed zero or a free parameter.
///
/// Zero-column (or zero-row) patterns are allowed so that an empty input
/// block (no attacker inputs, say) is still a well-typed matrix.
class StructuredMatrix {
 public:
  StructuredMatrix() = default;
  StructuredMatrix(std::size_t rows, std::size_t cols);
  /// Throws std::out_of_range for a star outside the shape. Duplicates are
  /// collapsed.
  StructuredMatrix(std::size_t rows, std::size_t cols,
                   std::span<const Star> stars);
  StructuredMatrix(std::size_t rows, std::size_t cols,
                   std::initializer_list<Star> stars);

  static StructuredMatrix full(std::size_t rows, std::size_t cols);
  static StructuredMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  bool is_star(std::size_t row, std::size_t col) const {
    return cells_[row * cols_ + col] != 0;
  }
  void add_star(std::size_t row, std::size_t col);

  std::size_t star_count() const { return star_count_; }
  bool is_zero() const { return star_count_ == 0; }

  /// Stars in row-major order.
  std::vector<Star> stars() const;
  /// Rows holding at least one star.
  std::vector<std::size_t> star_rows() const;

  friend bool operator==(const StructuredMatrix&,
                         const StructuredMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t star_count_ = 0;
  std::vector<std::uint8_t> cells_;
};

/// Generic sum: the union of both star sets. Two free parameters never
/// cancel.
StructuredMatrix pattern_sum(const StructuredMatrix& lhs,
                             const StructuredMatrix& rhs);

/// Generic product: (i,j) is a star iff some k has (i,k) and (k,j) stars.
StructuredMatrix pattern_product(const StructuredMatrix& lhs,
                                 const StructuredMatrix& rhs);

/// [A] + [B][K]: the structure of A under state feedback through B.
StructuredMatrix closed_loop(const StructuredMatrix& a,
                             const StructuredMatrix& b,
                             const StructuredMatrix& k);

/// Z(lhs) ⊆ Z(rhs): every fixed zero of lhs is also a fixed zero of rhs.
/// Equivalently stars(rhs) ⊆ stars(lhs).
bool zero_structure_subset(const StructuredMatrix& lhs,
                           const StructuredMatrix& rhs);

std::string to_string(const StructuredMatrix& m);

}  // namespace strucres

#endif  // STRUCRES_STRUCTURED_MATRIX_HPP
