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

#include "tfq/static_solver.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tfq {

Eigen::MatrixXd build_coupling(const ChainGeometry& geometry,
                               const Eigen::VectorXd& g) {
  const int n = geometry.n_sites;
  if (g.size() != n) {
    throw std::invalid_argument("build_coupling: field vector has " +
                                std::to_string(g.size()) + " entries for " +
                                std::to_string(n) + " sites");
  }
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  a.diagonal() = 2.0 * g;
  a.diagonal(-1).setConstant(-2.0);
  return a;
}

BogoliubovBasis solve_static(const Eigen::MatrixXd& coupling) {
  const int n = static_cast<int>(coupling.rows());
  if (coupling.cols() != n || n == 0) {
    throw std::invalid_argument("solve_static: coupling matrix must be square");
  }

  Eigen::BDCSVD<Eigen::MatrixXd> svd(coupling,
                                     Eigen::ComputeFullU | Eigen::ComputeFullV);

  // Eigen sorts singular values descending; we want ascending frequencies.
  BogoliubovBasis basis;
  basis.omega.resize(n);
  Eigen::MatrixXd phi(n, n);  // u_plus columns
  Eigen::MatrixXd psi(n, n);  // u_minus columns
  for (int m = 0; m < n; ++m) {
    const int src = n - 1 - m;
    basis.omega[m] = svd.singularValues()[src];
    phi.col(m) = svd.matrixU().col(src);
    psi.col(m) = svd.matrixV().col(src);
  }

  // Deterministic sign: largest-magnitude entry of each u_plus column > 0.
  for (int m = 0; m < n; ++m) {
    int idx = 0;
    phi.col(m).cwiseAbs().maxCoeff(&idx);
    if (phi(idx, m) < 0.0) {
      phi.col(m) = -phi.col(m);
      psi.col(m) = -psi.col(m);
    }
  }

  basis.u = 0.5 * (phi + psi);
  basis.v = 0.5 * (phi - psi);
  return basis;
}

BogoliubovBasis solve_static(const FieldProfile& profile,
                             const ChainGeometry& geometry, double t) {
  return solve_static(build_coupling(geometry, field_vector(profile, geometry, t)));
}

double energy_gap(const BogoliubovBasis& basis) {
  if (basis.n_sites() < 2) {
    throw std::invalid_argument("energy_gap: need at least 2 modes");
  }
  return basis.omega[0] + basis.omega[1];
}

Eigen::VectorXd low_spectrum(const BogoliubovBasis& basis, int m_max) {
  if (m_max < 0 || m_max >= basis.n_sites()) {
    throw std::out_of_range("low_spectrum: m_max outside 0..N-1");
  }
  return basis.omega.head(m_max + 1);
}

double unitarity_defect(const Eigen::MatrixXd& u, const Eigen::MatrixXd& v) {
  const int n = static_cast<int>(u.rows());
  const Eigen::MatrixXd gram = u.transpose() * u + v.transpose() * v;
  const Eigen::MatrixXd mix = u.transpose() * v + v.transpose() * u;
  double defect = (gram - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  return std::max(defect, mix.cwiseAbs().maxCoeff());
}

}  // namespace tfq
