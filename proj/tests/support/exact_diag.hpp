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

// Test-only brute-force oracle: dense diagonalization of the 2^N-dimensional
// open transverse-field Ising chain, independent of the free-fermion code
// paths it is used to check.

#ifndef TFQ_TESTS_EXACT_DIAG_HPP
#define TFQ_TESTS_EXACT_DIAG_HPP

#include <cstdint>

#include <Eigen/Core>

namespace tfq::testing {

class ExactIsingChain {
 public:
  /// Diagonalizes H = -sum g_n sx_n - sum sz_n sz_{n+1} for N = g.size()
  /// spins (N <= 12 or so; cost grows as 8^N).
  explicit ExactIsingChain(const Eigen::VectorXd& g);

  int n_sites() const { return n_; }
  const Eigen::VectorXd& energies() const { return energies_; }
  double ground_energy() const { return energies_[0]; }

  /// <prod_n sx_n> of eigenstate k; +-1 up to numerical error away from
  /// degeneracies.
  double parity(int k) const;

  /// Gap to the lowest excited state in the ground state's parity sector.
  double same_parity_gap() const;

  // Ground-state observables.
  double sigma_x(int n) const;  // 1-based site
  double zz(int m, int n) const;
  double kink_density() const;

  /// Ground-state Majorana covariance Gamma_{jk} = (i/2) <[w_j, w_k]> in the
  /// site-interleaved ordering (a_1, b_1, a_2, b_2, ...), built by applying
  /// the Jordan-Wigner strings a_n = -sz_n prod_{m<n} sx_m and
  /// b_n = sy_n prod_{m<n} sx_m to the exact ground state.
  Eigen::MatrixXd majorana_covariance() const;

 private:
  int n_;
  Eigen::VectorXd g_;
  Eigen::VectorXd energies_;
  Eigen::MatrixXd states_;  // columns are eigenstates, sz product basis
};

/// Deterministic pseudo-random field vector in [lo, hi] (splitmix64).
Eigen::VectorXd random_field(int n, std::uint64_t seed, double lo = 0.4,
                             double hi = 1.6);

}  // namespace tfq::testing

#endif  // TFQ_TESTS_EXACT_DIAG_HPP
