/*
 * Copyright 2026 The tfquench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef TFQ_PFAFFIAN_HPP
#define TFQ_PFAFFIAN_HPP

#include <Eigen/Core>
#include <cmath>
#include <stdexcept>
#include <type_traits>

namespace tfq {

/// Pfaffian of a real skew-symmetric matrix.
///
/// The matrix is reduced to skew-symmetric tridiagonal form T = Q^T M Q by
/// Householder reflections; then Pf(M) = det(Q) * T(0,1) * T(2,3) * ...
/// Orthogonal similarity keeps the reduction numerically stable, unlike the
/// naive cofactor recursion. Cost is O(n^3).
///
/// Throws std::invalid_argument for odd dimensions or when the asymmetry
/// |M + M^T| exceeds skew_tol relative to the largest entry.
template <typename Scalar>
Scalar pfaffian(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m,
                Scalar skew_tol = Scalar(1e-10)) {
  static_assert(std::is_floating_point_v<Scalar>,
                "pfaffian: real scalar types only");
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  const Eigen::Index n = m.rows();
  if (m.cols() != n) {
    throw std::invalid_argument("pfaffian: matrix must be square");
  }
  if (n % 2 != 0) {
    throw std::invalid_argument("pfaffian: dimension must be even");
  }
  if (n == 0) {
    return Scalar(1);
  }
  const Scalar scale = m.cwiseAbs().maxCoeff();
  if ((m + Matrix(m.transpose())).cwiseAbs().maxCoeff() >
      skew_tol * std::max(scale, Scalar(1))) {
    throw std::invalid_argument("pfaffian: matrix is not skew-symmetric");
  }

  Scalar sign(1);
  Vector householder(n);
  Vector work(n);
  for (Eigen::Index k = 0; k + 2 < n; ++k) {
    const Eigen::Index len = n - k - 1;  // rows k+1..n-1 of column k
    auto column = m.col(k).tail(len);
    const Scalar tail_norm = column.tail(len - 1).norm();
    if (tail_norm == Scalar(0)) {
      continue;  // already in tridiagonal form at this column
    }
    const Scalar x0 = column[0];
    const Scalar beta = (x0 >= Scalar(0)) ? -std::hypot(x0, tail_norm)
                                          : std::hypot(x0, tail_norm);
    // Reflector H = I - tau w w^T with w = [1, essential], H x = beta e_1.
    householder[0] = Scalar(1);
    householder.segment(1, len - 1) = column.tail(len - 1) / (x0 - beta);
    const Scalar tau = (beta - x0) / beta;

    auto block = m.bottomRightCorner(len, len);
    auto w = householder.head(len);
    // Skew-symmetric congruence H^T B H = B + w p^T - p w^T with
    // p = tau (B w - 0.5 tau (w^T B w) w); here w^T B w = 0 exactly.
    work.head(len).noalias() = tau * (block * w);
    block.noalias() += w * work.head(len).transpose();
    block.noalias() -= work.head(len) * w.transpose();

    m(k + 1, k) = beta;
    m(k, k + 1) = -beta;
    m.col(k).tail(len - 1).setZero();
    m.row(k).tail(len - 1).setZero();
    sign = -sign;  // det of a nontrivial reflector is -1
  }

  Scalar pf = sign;
  for (Eigen::Index k = 0; k < n; k += 2) {
    pf *= m(k, k + 1);
  }
  return pf;
}

}  // namespace tfq

#endif  // TFQ_PFAFFIAN_HPP
