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

#ifndef TFQ_COVARIANCE_HPP
#define TFQ_COVARIANCE_HPP

#include <Eigen/Core>

#include "tfq/static_solver.hpp"

namespace tfq {

/// Majorana covariance matrix of a Gaussian fermionic state.
///
/// With the site-interleaved Majorana vector
///   w = (a_1, b_1, a_2, b_2, ...),  a_n = c_n + c'_n,  b_n = i(c'_n - c_n),
/// the entries are Gamma_{jk} = (i/2) <[w_j, w_k]>, which is real and
/// antisymmetric; pure states satisfy Gamma^2 = -I. The interleaved ordering
/// is fixed because Pfaffian signs in string correlators depend on it.
struct MajoranaCovariance {
  Eigen::MatrixXd gamma;

  int n_sites() const { return static_cast<int>(gamma.rows()) / 2; }
  /// max |Gamma^2 + I|; zero for a pure state.
  double purity_defect() const;
};

/// Row/column of Majorana a_n / b_n for 1-based site n.
inline int majorana_a(int n) { return 2 * (n - 1); }
inline int majorana_b(int n) { return 2 * (n - 1) + 1; }

/// Covariance of the vacuum state annihilated by every quasiparticle of the
/// mode matrices (u, v), i.e. of c_n = sum_m (u_{nm} g_m + v*_{nm} g'_m).
/// The column norms must satisfy Bogoliubov unitarity within norm_tol.
MajoranaCovariance covariance(const Eigen::MatrixXcd& u,
                              const Eigen::MatrixXcd& v,
                              double norm_tol = 1e-6);

/// Ground-state covariance of a solved static basis.
MajoranaCovariance covariance(const BogoliubovBasis& basis,
                              double norm_tol = 1e-8);

}  // namespace tfq

#endif  // TFQ_COVARIANCE_HPP
