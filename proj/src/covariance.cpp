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

#include "tfq/covariance.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tfq {

double MajoranaCovariance::purity_defect() const {
  const Eigen::Index d = gamma.rows();
  Eigen::MatrixXd sq = gamma * gamma;
  sq += Eigen::MatrixXd::Identity(d, d);
  return sq.cwiseAbs().maxCoeff();
}

MajoranaCovariance covariance(const Eigen::MatrixXcd& u,
                              const Eigen::MatrixXcd& v, double norm_tol) {
  const int n = static_cast<int>(u.rows());
  if (u.cols() != n || v.rows() != n || v.cols() != n) {
    throw std::invalid_argument("covariance: mode matrices must be square N x N");
  }
  // Cheap necessary condition for Bogoliubov unitarity: every mode column
  // carries unit norm. Full Gram checks are the solver's / run driver's job.
  for (int m = 0; m < n; ++m) {
    const double norm2 = u.col(m).squaredNorm() + v.col(m).squaredNorm();
    if (std::abs(norm2 - 1.0) > norm_tol) {
      throw std::invalid_argument(
          "covariance: mode " + std::to_string(m) +
          " violates unitarity beyond tolerance (|norm^2 - 1| = " +
          std::to_string(std::abs(norm2 - 1.0)) + ")");
    }
  }

  // Two-point functions in the quasiparticle vacuum:
  //   <c_n c_m>   = (u v^H)_{nm}      <c'_n c'_m> = its dagger
  //   <c_n c'_m>  = (u u^H)_{nm}      <c'_n c_m>  = (v v^H)_{nm}
  const Eigen::MatrixXcd pair = u * v.adjoint();
  const Eigen::MatrixXcd hole = u * u.adjoint();
  const Eigen::MatrixXcd part = v * v.adjoint();

  // Majorana second moments <w_j w_k>; Gamma_{jk} = i(<w_j w_k> - delta_jk).
  const Eigen::MatrixXcd aa = pair + pair.adjoint() + hole + part;
  const Eigen::MatrixXcd bb = -pair - pair.adjoint() + hole + part;
  const Eigen::MatrixXcd ab =
      std::complex<double>(0, 1) * (hole - part - pair + pair.adjoint());
  const Eigen::MatrixXcd ba =
      std::complex<double>(0, 1) * (part - hole - pair + pair.adjoint());

  MajoranaCovariance cov;
  cov.gamma.resize(2 * n, 2 * n);
  const std::complex<double> im(0, 1);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      const double d = (p == q) ? 1.0 : 0.0;
      cov.gamma(2 * p, 2 * q) = (im * (aa(p, q) - d)).real();
      cov.gamma(2 * p, 2 * q + 1) = (im * ab(p, q)).real();
      cov.gamma(2 * p + 1, 2 * q) = (im * ba(p, q)).real();
      cov.gamma(2 * p + 1, 2 * q + 1) = (im * (bb(p, q) - d)).real();
    }
  }
  return cov;
}

MajoranaCovariance covariance(const BogoliubovBasis& basis, double norm_tol) {
  return covariance(Eigen::MatrixXcd(basis.u.cast<std::complex<double>>()),
                    Eigen::MatrixXcd(basis.v.cast<std::complex<double>>()),
                    norm_tol);
}

}  // namespace tfq
