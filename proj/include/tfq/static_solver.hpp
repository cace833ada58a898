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

#ifndef TFQ_STATIC_SOLVER_HPP
#define TFQ_STATIC_SOLVER_HPP

#include <Eigen/Core>

#include "tfq/chain.hpp"

namespace tfq {

/// Quasiparticle basis of the quadratic fermion Hamiltonian obtained after
/// the Jordan-Wigner transformation.
///
/// Column m of (u, v) holds the mode amplitudes (u_{nm}, v_{nm}) of the
/// Bogoliubov quasiparticle gamma_m with energy omega[m] >= 0; frequencies
/// are sorted ascending. The columns satisfy Bogoliubov unitarity,
/// u^T u + v^T v = I and u^T v + v^T u = 0, and the combinations
/// u_plus = u + v, u_minus = u - v are the left/right singular vectors of
/// the coupling matrix.
struct BogoliubovBasis {
  Eigen::MatrixXd u;
  Eigen::MatrixXd v;
  Eigen::VectorXd omega;

  int n_sites() const { return static_cast<int>(omega.size()); }
  Eigen::MatrixXd u_plus() const { return u + v; }
  Eigen::MatrixXd u_minus() const { return u - v; }
};

/// Coupling matrix A of the stationary Bogoliubov-de Gennes problem
/// omega u+ = A u-, omega u- = A^T u+ for a field vector g:
/// A(n, n) = 2 g_n, A(n, n-1) = -2, everything else zero (open chain, no
/// wraparound). Throws on a length mismatch with the geometry.
Eigen::MatrixXd build_coupling(const ChainGeometry& geometry,
                               const Eigen::VectorXd& g);

/// Solves the stationary Bogoliubov-de Gennes equations by a singular value
/// decomposition of the coupling matrix: A = Phi Sigma Psi^T with
/// omega = diag(Sigma) >= 0, u_plus = Phi, u_minus = Psi. Sign convention:
/// each mode is flipped so the largest-magnitude entry of its u_plus column
/// is positive, making the output deterministic.
BogoliubovBasis solve_static(const Eigen::MatrixXd& coupling);

/// Ground-state basis for a profile frozen at time t.
BogoliubovBasis solve_static(const FieldProfile& profile,
                             const ChainGeometry& geometry, double t = 0.0);

/// Energy of the lowest even-parity excitation, omega_0 + omega_1
/// (two quasiparticles; a single one flips fermion parity).
double energy_gap(const BogoliubovBasis& basis);

/// The lowest frequencies omega_0 .. omega_{m_max}.
Eigen::VectorXd low_spectrum(const BogoliubovBasis& basis, int m_max);

/// max |u^T u + v^T v - I| and |u^T v + v^T u| over all entries.
double unitarity_defect(const Eigen::MatrixXd& u, const Eigen::MatrixXd& v);

}  // namespace tfq

#endif  // TFQ_STATIC_SOLVER_HPP
