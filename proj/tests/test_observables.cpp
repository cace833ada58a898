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

#include <doctest.h>

#include <Eigen/QR>
#include <cmath>
#include <random>

#include "support/exact_diag.hpp"
#include "tfq/covariance.hpp"
#include "tfq/observables.hpp"
#include "tfq/static_solver.hpp"

using namespace tfq;

namespace {

MajoranaCovariance ground_covariance(const Eigen::VectorXd& g) {
  const int n = static_cast<int>(g.size());
  return covariance(solve_static(build_coupling(ChainGeometry(n), g)));
}

}  // namespace

TEST_CASE("covariance is antisymmetric and pure") {
  const auto cov = ground_covariance(testing::random_field(10, 31));
  CHECK((cov.gamma + cov.gamma.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(cov.purity_defect() <= 1e-8);
}

TEST_CASE("strong-field paramagnet is fully x-polarized") {
  const auto cov = ground_covariance(Eigen::VectorXd::Constant(8, 1e6));
  for (int n = 1; n <= 8; ++n) {
    CHECK(std::abs(transverse_magnetization(cov, n) - 1.0) <= 1e-6);
  }
}

TEST_CASE("zero-field ferromagnet: full order, no kinks, no x magnetization") {
  const auto cov = ground_covariance(Eigen::VectorXd::Zero(8));
  for (int n = 1; n <= 8; ++n) {
    CHECK(std::abs(transverse_magnetization(cov, n)) <= 1e-10);
  }
  for (int m = 1; m <= 8; ++m) {
    for (int n = m; n <= 8; ++n) {
      CHECK(zz_correlator(cov, m, n) == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
  CHECK(kink_density(cov) <= 1e-12);
  const auto profile = magnetization_profile(cov, 4, 2);
  for (int n = 1; n <= 8; ++n) {
    CHECK(profile.z[n - 1] == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("fully kinked covariance saturates the kink density") {
  // Signed perfect matching pairing b_n with a_{n+1}: every bond carries
  // <sz sz> = -1; the leftover pair (a_1, b_N) closes the matching.
  const int n = 6;
  Eigen::MatrixXd gamma = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int site = 1; site < n; ++site) {
    gamma(majorana_b(site), majorana_a(site + 1)) = 1.0;
    gamma(majorana_a(site + 1), majorana_b(site)) = -1.0;
  }
  gamma(majorana_a(1), majorana_b(n)) = 1.0;
  gamma(majorana_b(n), majorana_a(1)) = -1.0;
  MajoranaCovariance cov{gamma};
  CHECK(cov.purity_defect() <= 1e-14);
  CHECK(kink_density(cov) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("zz correlator basics") {
  const auto cov = ground_covariance(testing::random_field(9, 77));
  CHECK(zz_correlator(cov, 4, 4) == 1.0);
  CHECK(zz_correlator(cov, 2, 7) ==
        doctest::Approx(zz_correlator(cov, 7, 2)).epsilon(1e-14));
  CHECK(std::abs(zz_correlator(cov, 1, 9)) <= 1.0 + 1e-12);
  CHECK_THROWS_AS(zz_correlator(cov, 0, 3), std::out_of_range);
  CHECK_THROWS_AS(transverse_magnetization(cov, 10), std::out_of_range);
}

TEST_CASE("all observables match exact diagonalization") {
  for (unsigned seed : {101u, 202u}) {
    const Eigen::VectorXd g = testing::random_field(6, seed);
    const testing::ExactIsingChain oracle(g);
    const auto cov = ground_covariance(g);

    // Full Majorana covariance, i.e. every fermionic two-point function.
    CHECK((cov.gamma - oracle.majorana_covariance()).cwiseAbs().maxCoeff() <=
          1e-10);
    for (int n = 1; n <= 6; ++n) {
      CHECK(transverse_magnetization(cov, n) ==
            doctest::Approx(oracle.sigma_x(n)).epsilon(1e-10));
    }
    for (int m = 1; m <= 6; ++m) {
      for (int n = m + 1; n <= 6; ++n) {
        CHECK(zz_correlator(cov, m, n) ==
              doctest::Approx(oracle.zz(m, n)).epsilon(1e-10));
      }
    }
    CHECK(kink_density(cov) ==
          doctest::Approx(oracle.kink_density()).epsilon(1e-10).scale(1.0));
  }
  // One larger instance.
  const Eigen::VectorXd g = testing::random_field(8, 303);
  const testing::ExactIsingChain oracle(g);
  const auto cov = ground_covariance(g);
  for (int m = 1; m <= 8; ++m) {
    for (int n = m + 1; n <= 8; ++n) {
      CHECK(zz_correlator(cov, m, n) ==
            doctest::Approx(oracle.zz(m, n)).epsilon(1e-10));
    }
  }
}

TEST_CASE("observables are invariant under degenerate-mode rotations") {
  // Zero field: omega = (0, 2, 2, ..., 2). Rotating the degenerate block
  // changes the basis but not the state.
  const int n = 8;
  const auto basis =
      solve_static(build_coupling(ChainGeometry(n), Eigen::VectorXd::Zero(n)));

  std::mt19937 gen(5);
  std::normal_distribution<double> dist;
  Eigen::MatrixXd noise(n - 1, n - 1);
  for (int i = 0; i < n - 1; ++i) {
    for (int j = 0; j < n - 1; ++j) {
      noise(i, j) = dist(gen);
    }
  }
  Eigen::MatrixXd rot = Eigen::MatrixXd::Identity(n, n);
  rot.bottomRightCorner(n - 1, n - 1) =
      Eigen::HouseholderQR<Eigen::MatrixXd>(noise).householderQ();

  BogoliubovBasis rotated = basis;
  rotated.u = basis.u * rot;
  rotated.v = basis.v * rot;
  const auto cov0 = covariance(basis);
  const auto cov1 = covariance(rotated);
  for (int m = 1; m <= n; ++m) {
    for (int site = m; site <= n; ++site) {
      CHECK(zz_correlator(cov0, m, site) ==
            doctest::Approx(zz_correlator(cov1, m, site)).epsilon(1e-10));
    }
  }
  CHECK(kink_density(cov0) ==
        doctest::Approx(kink_density(cov1)).epsilon(1e-10).scale(1.0));
}

TEST_CASE("excitation density against a target basis") {
  const int n = 12;
  const Eigen::VectorXd g = testing::random_field(n, 404);
  const auto target = solve_static(build_coupling(ChainGeometry(n), g));
  const Eigen::MatrixXcd u = target.u.cast<std::complex<double>>();
  const Eigen::MatrixXcd v = target.v.cast<std::complex<double>>();

  SUBCASE("the target vacuum carries no excitations") {
    CHECK(excitation_density(u, v, target) <= 1e-8);
  }
  SUBCASE("one occupied mode contributes 1/N") {
    Eigen::MatrixXcd u1 = u;
    Eigen::MatrixXcd v1 = v;
    u1.col(0) = v.col(0).conjugate();
    v1.col(0) = u.col(0).conjugate();
    CHECK(excitation_density(u1, v1, target) ==
          doctest::Approx(1.0 / n).epsilon(1e-10));
  }
  SUBCASE("geometry mismatch is rejected") {
    const auto small = solve_static(
        build_coupling(ChainGeometry(6), Eigen::VectorXd::Ones(6)));
    CHECK_THROWS_AS(excitation_density(u, v, small), std::invalid_argument);
  }
}

TEST_CASE("covariance rejects badly non-unitary modes") {
  const int n = 6;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(n, n) * 2.0;  // norm 4
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(n, n);
  CHECK_THROWS_AS(covariance(u, v), std::invalid_argument);
}

TEST_CASE("magnetization profile rejects a bad reference site") {
  const auto cov = ground_covariance(Eigen::VectorXd::Zero(8));
  CHECK_THROWS_AS(magnetization_profile(cov, 0, 2), std::out_of_range);
  CHECK_THROWS_AS(magnetization_profile(cov, 4, 0), std::invalid_argument);
}
