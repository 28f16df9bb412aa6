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

#include "strucres/numeric_oracle.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

#include "strucres/resilience.hpp"

namespace strucres {

Eigen::MatrixXd sample_realization(const StructuredMatrix& m,
                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> magnitude(0.1, 1.0);
  std::bernoulli_distribution negative(0.5);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(
      static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (const Star& s : m.stars()) {
    double value = magnitude(rng);
    if (negative(rng)) value = -value;
    out(static_cast<Eigen::Index>(s.row), static_cast<Eigen::Index>(s.col)) =
        value;
  }
  return out;
}

Realization sample_realization(const StructuredMatrix& a,
                               const StructuredMatrix& b, std::uint64_t seed) {
  return {sample_realization(a, seed),
          sample_realization(b, trial_seed(seed, 0x5eed)), seed};
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t kalman_rank(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                        double threshold_scale) {
  const Eigen::Index n = a.rows();
  const Eigen::Index p = b.cols();
  if (a.cols() != n || b.rows() != n)
    throw DimensionError("kalman_rank: A must be n x n and B n x p");
  if (n == 0 || p == 0) return 0;

  Eigen::MatrixXd ctrb(n, n * p);
  Eigen::MatrixXd block = b;
  for (Eigen::Index k = 0; k < n; ++k) {
    ctrb.middleCols(k * p, p) = block;
    block = a * block;
  }
  for (Eigen::Index c = 0; c < ctrb.cols(); ++c) {
    double norm = ctrb.col(c).norm();
    if (norm > 0.0) ctrb.col(c) /= norm;
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(ctrb);
  const Eigen::VectorXd& sigma = svd.singularValues();
  if (sigma.size() == 0 || sigma(0) == 0.0) return 0;
  const double tol = threshold_scale *
                     static_cast<double>(std::max(n, n * p)) *
                     std::numeric_limits<double>::epsilon() * sigma(0);
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) > tol) ++rank;
  return rank;
}

OracleReport validate_structural_verdict(const StructuredMatrix& a,
                                         const StructuredMatrix& b,
                                         std::size_t trials, std::uint64_t seed,
                                         double threshold_scale) {
  if (trials == 0)
    throw std::invalid_argument("validate_structural_verdict: trials must be >= 1");
  OracleReport report;
  report.structurally_controllable = is_structurally_controllable(a, b).controllable;
  report.n = a.rows();
  report.trials = trials;
  for (std::size_t k = 0; k < trials; ++k) {
    const std::uint64_t s = trial_seed(seed, k);
    const Realization r = sample_realization(a, b, s);
    const bool full = kalman_rank(r.a, r.b, threshold_scale) == a.rows();
    if (full) ++report.full_rank;
    if (full != report.structurally_controllable)
      report.violating_seeds.push_back(s);
  }
  return report;
}

}  // namespace strucres
