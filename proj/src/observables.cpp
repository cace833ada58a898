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

#include "tfq/observables.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "tfq/pfaffian.hpp"

namespace tfq {

namespace {

void require_site(const MajoranaCovariance& cov, int n, const char* who) {
  if (n < 1 || n > cov.n_sites()) {
    throw std::out_of_range(std::string(who) + ": site " + std::to_string(n) +
                            " outside 1.." + std::to_string(cov.n_sites()));
  }
}

}  // namespace

double transverse_magnetization(const MajoranaCovariance& cov, int n) {
  require_site(cov, n, "transverse_magnetization");
  // sx_n = -i a_n b_n, so <sx_n> = -Gamma(a_n, b_n).
  return -cov.gamma(majorana_a(n), majorana_b(n));
}

double zz_correlator(const MajoranaCovariance& cov, int m, int n) {
  require_site(cov, m, "zz_correlator");
  require_site(cov, n, "zz_correlator");
  if (m == n) {
    return 1.0;
  }
  if (m > n) {
    std::swap(m, n);
  }
  // sz_m sz_n = (-i)^(n-m) b_m a_{m+1} b_{m+1} ... a_n; Wick's theorem turns
  // the string expectation into the Pfaffian of the contraction matrix, and
  // the (-i) powers combine with it to (-1)^(n-m) Pf(Gamma[idx, idx]).
  const int len = n - m;
  std::vector<int> idx;
  idx.reserve(2 * len);
  idx.push_back(majorana_b(m));
  for (int j = m + 1; j < n; ++j) {
    idx.push_back(majorana_a(j));
    idx.push_back(majorana_b(j));
  }
  idx.push_back(majorana_a(n));

  Eigen::MatrixXd sub(idx.size(), idx.size());
  for (std::size_t p = 0; p < idx.size(); ++p) {
    for (std::size_t q = 0; q < idx.size(); ++q) {
      sub(p, q) = cov.gamma(idx[p], idx[q]);
    }
  }
  const double sign = (len % 2 == 0) ? 1.0 : -1.0;
  return sign * pfaffian(sub);
}

MagnetizationProfile magnetization_profile(const MajoranaCovariance& cov,
                                           int n_ref, int r_cal) {
  const int n_sites = cov.n_sites();
  require_site(cov, n_ref, "magnetization_profile");
  if (r_cal < 1) {
    throw std::invalid_argument("magnetization_profile: r_cal must be >= 1");
  }
  const int lo = std::max(1, n_ref - r_cal);
  const int hi = std::min(n_sites, n_ref + r_cal);
  const double cal = zz_correlator(cov, lo, hi);
  if (cal <= 0.0) {
    throw std::invalid_argument(
        "magnetization_profile: reference site is not ferromagnetic "
        "(calibration correlator " +
        std::to_string(cal) + " <= 0)");
  }
  MagnetizationProfile profile;
  profile.n_ref = n_ref;
  profile.r_cal = r_cal;
  profile.c_ref.resize(n_sites);
  profile.z.resize(n_sites);
  const double norm = std::sqrt(cal);
  for (int n = 1; n <= n_sites; ++n) {
    profile.c_ref[n - 1] = zz_correlator(cov, n_ref, n);
    profile.z[n - 1] = profile.c_ref[n - 1] / norm;
  }
  return profile;
}

double kink_density(const MajoranaCovariance& cov) {
  const int n_sites = cov.n_sites();
  // Nearest-neighbour strings are single contractions:
  // <sz_n sz_{n+1}> = -Gamma(b_n, a_{n+1}).
  double total = 0.0;
  for (int n = 1; n < n_sites; ++n) {
    const double zz = -cov.gamma(majorana_b(n), majorana_a(n + 1));
    total += 0.5 * (1.0 - zz);
  }
  return total / (n_sites - 1);
}

double excitation_density(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v,
                          const BogoliubovBasis& target) {
  const int n = target.n_sites();
  if (u.rows() != n || v.rows() != n || u.cols() != n || v.cols() != n) {
    throw std::invalid_argument(
        "excitation_density: state and target bases live on different chains");
  }
  // Anomalous block u0^T v + v0^T u of the basis map, one real GEMM per part.
  Eigen::MatrixXd block_re = target.u.transpose() * v.real();
  block_re.noalias() += target.v.transpose() * u.real();
  Eigen::MatrixXd block_im = target.u.transpose() * v.imag();
  block_im.noalias() += target.v.transpose() * u.imag();
  return (block_re.squaredNorm() + block_im.squaredNorm()) / n;
}

}  // namespace tfq
