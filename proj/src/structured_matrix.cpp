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

#include "strucres/structured_matrix.hpp"

#include <sstream>

namespace strucres {

namespace {

void require_same_shape(const StructuredMatrix& lhs,
                        const StructuredMatrix& rhs, const char* what) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    std::ostringstream msg;
    msg << what << ": shape " << lhs.rows() << "x" << lhs.cols()
        << " does not match " << rhs.rows() << "x" << rhs.cols();
    throw DimensionError(msg.str());
  }
}

}  // namespace

StructuredMatrix::StructuredMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), cells_(rows * cols, 0) {}

StructuredMatrix::StructuredMatrix(std::size_t rows, std::size_t cols,
                                   std::span<const Star> stars)
    : StructuredMatrix(rows, cols) {
  for (const Star& s : stars) add_star(s.row, s.col);
}

StructuredMatrix::StructuredMatrix(std::size_t rows, std::size_t cols,
                                   std::initializer_list<Star> stars)
    : StructuredMatrix(rows, cols,
                       std::span<const Star>(stars.begin(), stars.size())) {}

StructuredMatrix StructuredMatrix::full(std::size_t rows, std::size_t cols) {
  StructuredMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.add_star(r, c);
  return m;
}

StructuredMatrix StructuredMatrix::identity(std::size_t n) {
  StructuredMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.add_star(i, i);
  return m;
}

void StructuredMatrix::add_star(std::size_t row, std::size_t col) {
  if (row >= rows_ || col >= cols_) {
    std::ostringstream msg;
    msg << "star (" << row << ", " << col << ") outside " << rows_ << "x"
        << cols_ << " pattern";
    throw std::out_of_range(msg.str());
  }
  std::uint8_t& cell = cells_[row * cols_ + col];
  if (cell == 0) {
    cell = 1;
    ++star_count_;
  }
}

std::vector<Star> StructuredMatrix::stars() const {
  std::vector<Star> out;
  out.reserve(star_count_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (is_star(r, c)) out.push_back({r, c});
  return out;
}

std::vector<std::size_t> StructuredMatrix::star_rows() const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (is_star(r, c)) {
        out.push_back(r);
        break;
      }
    }
  }
  return out;
}

StructuredMatrix pattern_sum(const StructuredMatrix& lhs,
                             const StructuredMatrix& rhs) {
  require_same_shape(lhs, rhs, "pattern_sum");
  StructuredMatrix out = lhs;
  for (const Star& s : rhs.stars()) out.add_star(s.row, s.col);
  return out;
}

StructuredMatrix pattern_product(const StructuredMatrix& lhs,
                                 const StructuredMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    std::ostringstream msg;
    msg << "pattern_product: " << lhs.rows() << "x" << lhs.cols()
        << " times " << rhs.rows() << "x" << rhs.cols();
    throw DimensionError(msg.str());
  }
  StructuredMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      if (!lhs.is_star(i, k)) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j)
        if (rhs.is_star(k, j)) out.add_star(i, j);
    }
  }
  return out;
}

StructuredMatrix closed_loop(const StructuredMatrix& a,
                             const StructuredMatrix& b,
                             const StructuredMatrix& k) {
  if (!a.is_square())
    throw DimensionError("closed_loop: system pattern must be square");
  if (b.rows() != a.rows() || k.rows() != b.cols() || k.cols() != a.cols()) {
    std::ostringstream msg;
    msg << "closed_loop: A is " << a.rows() << "x" << a.cols() << ", B is "
        << b.rows() << "x" << b.cols() << ", K is " << k.rows() << "x"
        << k.cols();
    throw DimensionError(msg.str());
  }
  return pattern_sum(a, pattern_product(b, k));
}

bool zero_structure_subset(const StructuredMatrix& lhs,
                           const StructuredMatrix& rhs) {
  require_same_shape(lhs, rhs, "zero_structure_subset");
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j)
      if (!lhs.is_star(i, j) && rhs.is_star(i, j)) return false;
  return true;
}

std::string to_string(const StructuredMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ' ';
      out += m.is_star(r, c) ? '*' : '0';
    }
    out += '\n';
  }
  return out;
}

}  // namespace strucres
