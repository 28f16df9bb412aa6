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

#ifndef STRUCRES_NUMERIC_ORACLE_HPP
#define STRUCRES_NUMERIC_ORACLE_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "strucres/structured_matrix.hpp"

namespace strucres {

/// A numeric (A, B) pair with nonzeros exactly at the stars of its patterns.
struct Realization {
  Eigen::MatrixXd a;
  Eigen::MatrixXd b;
  std::uint64_t seed = 0;
};

/// Stars drawn independently and uniformly from [-1, -0.1] ∪ [0.1, 1];
/// every other entry is zero. Deterministic in `seed`.
Eigen::MatrixXd sample_realization(const StructuredMatrix& m,
                                   std::uint64_t seed);

Realization sample_realization(const StructuredMatrix& a,
                               const StructuredMatrix& b, std::uint64_t seed);

/// Seed of trial k derived from a master seed (splitmix64 step).
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial);

/// Numerical rank of [B AB ... A^{n-1}B]. Each column is scaled to unit
/// norm before the SVD; singular values at or below
/// threshold_scale * max(n, n*p) * eps * sigma_max count as zero.
std::size_t kalman_rank(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                        double threshold_scale = 1.0);

struct OracleReport {
  bool structurally_controllable = false;
  std::size_t n = 0;
  std::size_t trials = 0;
  std::size_t full_rank = 0;
  /// Seeds whose realization contradicted the structural verdict.
  std::vector<std::uint64_t> violating_seeds;

  bool agrees() const { return violating_seeds.empty(); }
};

/// Samples `trials` realizations and checks each against the structural
/// verdict: full rank every time when structurally controllable, never full
/// rank otherwise.
OracleReport validate_structural_verdict(const StructuredMatrix& a,
                                         const StructuredMatrix& b,
                                         std::size_t trials,
                                         std::uint64_t seed,
                                         double threshold_scale = 1.0);

}  // namespace strucres

#endif  // STRUCRES_NUMERIC_ORACLE_HPP
