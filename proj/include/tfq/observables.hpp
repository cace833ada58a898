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

#ifndef TFQ_OBSERVABLES_HPP
#define TFQ_OBSERVABLES_HPP

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "tfq/covariance.hpp"
#include "tfq/static_solver.hpp"

namespace tfq {

/// <sx_n> = 1 - 2 <c'_n c_n>. Site n is 1-based.
double transverse_magnetization(const MajoranaCovariance& cov, int n);

/// <sz_m sz_n>, evaluated as the Pfaffian of the 2|n-m| x 2|n-m| submatrix
/// of the covariance picked out by the Jordan-Wigner string
/// b_m a_{m+1} b_{m+1} ... a_n. Symmetric in (m, n); equals 1 for m = n.
double zz_correlator(const MajoranaCovariance& cov, int m, int n);

/// Ferromagnetic magnetization estimator around a reference site:
/// z[n] = C(n_ref, n) / sqrt(C(n_ref - r_cal, n_ref + r_cal)) with
/// C = zz_correlator. The calibration ratio removes the reference-site
/// amplitude, so z[n_ref] approximates the local order parameter and z
/// decays to zero in the paramagnet. A finite chain has <sz> = 0 by
/// symmetry, which is why an estimator is needed at all.
struct MagnetizationProfile {
  int n_ref = 0;
  int r_cal = 0;
  Eigen::VectorXd z;          // estimator per site, 1-based site n -> z[n-1]
  Eigen::VectorXd c_ref;      // raw correlator C(n_ref, n)
};

MagnetizationProfile magnetization_profile(const MajoranaCovariance& cov,
                                           int n_ref, int r_cal = 10);

/// Density of flipped bonds, (1/(N-1)) sum_n (1 - <sz_n sz_{n+1}>)/2.
/// Counts kinks when the field is (close to) zero everywhere.
double kink_density(const MajoranaCovariance& cov);

/// Density of quasiparticles of the target basis present in the state with
/// (complex) mode matrices (u, v):
///   d = (1/N) sum_m <g'_m g_m> = (1/N) || u0^T v + v0^T u ||_F^2,
/// the Frobenius norm of the anomalous block of the Bogoliubov map between
/// the two bases. Zero iff the state is the target vacuum.
double excitation_density(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v,
                          const BogoliubovBasis& target);

/// Everything measured at the end of one quench run.
struct QuenchResult {
  int n_sites = 0;
  double alpha = 0.0;   // 0 for homogeneous profiles
  double v = 0.0;       // 0 for homogeneous profiles
  double tau_q = 0.0;   // effective 1/(alpha v) or the ramp rate
  double d = 0.0;       // quasiparticle density against the final basis
  double kink_density = 0.0;
  double unitarity_defect = 0.0;
  std::optional<MagnetizationProfile> correlator_profile;
  Eigen::VectorXd snapshot_field;    // field at the snapshot, empty if none
  Eigen::VectorXd snapshot_sigma_x;  // <sx_n> at the snapshot, empty if none
};

}  // namespace tfq

#endif  // TFQ_OBSERVABLES_HPP
