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

// End-to-end validation suite. Each numbered check prints one PASS/FAIL
// line; the exit code is the number of failures. Run with --only <k> to
// execute a single check.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/LU>

#include "support/exact_diag.hpp"
#include "tfq/analytic.hpp"
#include "tfq/chain.hpp"
#include "tfq/covariance.hpp"
#include "tfq/dynamics.hpp"
#include "tfq/observables.hpp"
#include "tfq/pfaffian.hpp"
#include "tfq/static_solver.hpp"

using namespace tfq;

namespace {

struct Check {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

// Runs a batch of quenches on a small worker pool; results in input order.
std::vector<QuenchResult> run_pool(const ChainGeometry& geom,
                                   const std::vector<FieldProfile>& profiles,
                                   const Rk4Config& config,
                                   const QuenchOptions& options, int workers) {
  std::vector<QuenchResult> results(profiles.size());
  std::atomic<std::size_t> cursor{0};
  auto work = [&]() {
    while (true) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= profiles.size()) return;
      results[i] = run_quench(geom, profiles[i], config, options);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < std::min<int>(workers, profiles.size()); ++w) {
    pool.emplace_back(work);
  }
  for (auto& t : pool) t.join();
  return results;
}

// Collected along the way for the numerics-hygiene check.
std::vector<double> g_run_defects;

// ---------------------------------------------------------------- check 1
Check oracle_equivalence() {
  Check c;
  int done = 0;
  for (int n : {4, 6, 8}) {
    const int reps = (n < 8) ? 7 : 6;  // 20 field vectors in total
    for (int rep = 0; rep < reps; ++rep, ++done) {
      const Eigen::VectorXd g =
          testing::random_field(n, 1000 * n + rep, 0.4, 1.6);
      const testing::ExactIsingChain oracle(g);
      const auto basis = solve_static(build_coupling(ChainGeometry(n), g));
      const auto cov = covariance(basis);

      c.require(std::abs(oracle.ground_energy() + 0.5 * basis.omega.sum()) <=
                    1e-10,
                "ground energy N=" + std::to_string(n));
      c.require(std::abs(oracle.same_parity_gap() -
                         (basis.omega[0] + basis.omega[1])) <= 1e-10,
                "even-sector gap N=" + std::to_string(n));
      for (int site = 1; site <= n; ++site) {
        c.require(std::abs(transverse_magnetization(cov, site) -
                           oracle.sigma_x(site)) <= 1e-10,
                  "sigma_x N=" + std::to_string(n));
      }
      for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
          c.require(
              std::abs(zz_correlator(cov, a, b) - oracle.zz(a, b)) <= 1e-10,
              "zz N=" + std::to_string(n));
        }
      }
      c.require(std::abs(kink_density(cov) - oracle.kink_density()) <= 1e-10,
                "kinks N=" + std::to_string(n));
    }
  }
  c.note(std::to_string(done) + " field vectors");
  return c;
}

// ---------------------------------------------------------------- check 2
Check gap_law() {
  Check c;
  const ChainGeometry geom(512);
  for (double alpha : {1.0 / 16, 1.0 / 64}) {
    const auto basis = solve_static(StaticTanhFront{alpha, 256.0}, geom);
    const double gap = energy_gap(basis);
    const double predicted = std::sqrt(8.0 * alpha);
    c.require(std::abs(gap / predicted - 1.0) <= 0.05,
              "alpha=" + fmt("%g", alpha) + " gap=" + fmt("%.5f", gap) +
                  " vs " + fmt("%.5f", predicted));
    c.note("alpha=" + fmt("%g", alpha) + ": gap/sqrt(8a)=" +
           fmt("%.4f", gap / predicted));
  }
  return c;
}

// ---------------------------------------------------------------- check 3
Check spectrum_law() {
  Check c;
  const ChainGeometry geom(512);
  const double alpha = 1.0 / 64;
  const auto basis = solve_static(StaticTanhFront{alpha, 256.0}, geom);
  const Eigen::VectorXd low = low_spectrum(basis, 4);
  for (int m = 1; m <= 4; ++m) {
    const double predicted = std::sqrt(8.0 * m * alpha);
    c.require(std::abs(low[m] / predicted - 1.0) <= 0.08,
              "m=" + std::to_string(m) + ": " + fmt("%.5f", low[m]) + " vs " +
                  fmt("%.5f", predicted));
  }
  c.note("omega_1..4 within 8% of sqrt(8 m alpha)");
  return c;
}

// ---------------------------------------------------------------- check 4
Check front_profile_collapse() {
  Check c;
  const int n = 256;
  const double n_c = 128.0;
  const std::vector<double> alphas = {1.0 / 16, 1.0 / 32, 1.0 / 64};

  // Z(x) for each slope on a common rescaled grid x in [-3, 3]. Comparing
  // rescaled curves needs the estimator applied consistently in rescaled
  // units: reference site at x = -4 and a calibration window of +-1 in x,
  // comfortably inside the ordered region for every slope (eps(n_ref) <= -1).
  const int grid = 61;
  std::vector<std::vector<double>> curves;
  std::vector<double> depth_ratio;
  for (double alpha : alphas) {
    const auto basis = solve_static(StaticTanhFront{alpha, n_c},
                                    ChainGeometry(n));
    const auto cov = covariance(basis);
    const int n_ref =
        static_cast<int>(std::lround(n_c - 4.0 / std::sqrt(alpha)));
    const int r_cal = static_cast<int>(std::lround(1.0 / std::sqrt(alpha)));
    const auto profile = magnetization_profile(cov, n_ref, r_cal);

    auto z_at = [&](double site) {
      const int lo = static_cast<int>(std::floor(site));
      const double w = site - lo;
      return (1.0 - w) * profile.z[lo - 1] + w * profile.z[lo];
    };
    std::vector<double> curve(grid);
    for (int i = 0; i < grid; ++i) {
      const double x = -3.0 + 0.1 * i;
      curve[i] = z_at(n_c + x / std::sqrt(alpha));
    }
    curves.push_back(curve);

    // Penetration depth: x where Z drops to Z(front)/e.
    const double z0 = z_at(n_c);
    double x_depth = 5.0;
    for (double x = 0.0; x <= 5.0; x += 0.01) {
      if (z_at(n_c + x / std::sqrt(alpha)) <= z0 / M_E) {
        x_depth = x;
        break;
      }
    }
    depth_ratio.push_back(x_depth);  // = depth / alpha^(-1/2)
  }

  for (std::size_t a = 0; a < curves.size(); ++a) {
    for (std::size_t b = a + 1; b < curves.size(); ++b) {
      double sum = 0.0;
      for (int i = 0; i < grid; ++i) {
        const double diff = curves[a][i] - curves[b][i];
        sum += diff * diff;
      }
      const double rms = std::sqrt(sum / grid);
      c.require(rms <= 0.05, "curve RMS(" + std::to_string(a) + "," +
                                 std::to_string(b) + ")=" + fmt("%.4f", rms));
      c.note("rms=" + fmt("%.4f", rms));
    }
  }
  const double lo = *std::min_element(depth_ratio.begin(), depth_ratio.end());
  const double hi = *std::max_element(depth_ratio.begin(), depth_ratio.end());
  c.require(hi / lo <= 1.5,
            "depth*sqrt(alpha) spread " + fmt("%.3f", lo) + ".." + fmt("%.3f", hi));
  c.note("depth*sqrt(alpha) in " + fmt("%.3f", lo) + ".." + fmt("%.3f", hi));
  return c;
}

// ---------------------------------------------------------------- check 5
Check below_threshold() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  Rk4Config config;
  config.threads = 2;
  // This window is long enough (~1700 time units at band-top frequency 6)
  // that the default step's RK4 damping alone would overshoot the 1e-6
  // drift budget; a slightly finer step keeps the run inside it.
  config.dt = 0.004;
  const QuenchResult q =
      run_quench(ChainGeometry(400), MovingTanhFront{1.0 / 64, 1.0}, config);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  g_run_defects.push_back(q.unitarity_defect);
  c.require(q.d < 1e-3, "d=" + fmt("%.2e", q.d));
  c.require(q.kink_density < 1e-3, "kinks=" + fmt("%.2e", q.kink_density));
  c.require(secs < 600.0, "runtime " + fmt("%.0f", secs) + " s");
  c.note("d=" + fmt("%.2e", q.d) + ", kinks=" + fmt("%.2e", q.kink_density) +
         ", " + fmt("%.0f", secs) + " s");
  return c;
}

// ------------------------------------------------------------- checks 6+9
std::vector<QuenchResult> g_front_runs;  // cache: v = 3, 4, 6 at N = 1000

Check landau_zener_match() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  const double alpha = 1.0 / 64;
  const std::vector<double> vs = {3.0, 4.0, 6.0};
  std::vector<FieldProfile> profiles;
  for (double v : vs) {
    profiles.push_back(MovingTanhFront{alpha, v});
  }
  Rk4Config config;
  config.threads = 1;
  g_front_runs = run_pool(ChainGeometry(1000), profiles, config, {}, 2);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto& q = g_front_runs[i];
    g_run_defects.push_back(q.unitarity_defect);
    const double predicted = predict_kink_density(alpha, vs[i]).d_closed;
    const double rel = q.d / predicted - 1.0;
    c.require(std::abs(rel) <= 0.15,
              "v=" + fmt("%g", vs[i]) + ": d=" + fmt("%.5f", q.d) + " vs " +
                  fmt("%.5f", predicted));
    c.note("v=" + fmt("%g", vs[i]) + ": d/pred=" + fmt("%.3f", 1.0 + rel));
  }
  c.require(secs <= 1800.0, "runtime " + fmt("%.0f", secs) + " s");
  c.note(fmt("%.0f", secs) + " s");
  return c;
}

// ---------------------------------------------------------------- check 7
Check homogeneous_baseline() {
  Check c;
  const std::vector<double> tau_qs = {16.0, 32.0, 64.0, 128.0};
  std::vector<FieldProfile> profiles;
  for (double tau_q : tau_qs) {
    profiles.push_back(HomogeneousRamp{tau_q});
  }
  Rk4Config config;
  config.threads = 1;
  const auto runs = run_pool(ChainGeometry(400), profiles, config, {}, 2);

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    g_run_defects.push_back(runs[i].unitarity_defect);
    const double x = std::log(tau_qs[i]);
    const double y = std::log(runs[i].d);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(runs.size());
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  const double prefactor = std::exp((sy - slope * sx) / m);
  const double reference = 1.0 / (2.0 * M_PI * std::sqrt(2.0));
  c.require(std::abs(slope + 0.5) <= 0.05, "exponent " + fmt("%.4f", slope));
  c.require(std::abs(prefactor / reference - 1.0) <= 0.10,
            "prefactor " + fmt("%.5f", prefactor) + " vs " +
                fmt("%.5f", reference));
  c.note("s=" + fmt("%.4f", slope) +
         ", prefactor/ref=" + fmt("%.4f", prefactor / reference));
  return c;
}

// ---------------------------------------------------------------- check 8
Check rescaled_collapse() {
  Check c;
  const std::vector<double> alphas = {1.0 / 32, 1.0 / 64};
  const std::vector<double> vs = {3.0, 4.0, 6.0};
  std::vector<FieldProfile> profiles;
  for (double alpha : alphas) {
    for (double v : vs) {
      profiles.push_back(MovingTanhFront{alpha, v});
    }
  }
  Rk4Config config;
  config.threads = 1;
  const auto runs = run_pool(ChainGeometry(400), profiles, config, {}, 2);
  for (const auto& q : runs) {
    g_run_defects.push_back(q.unitarity_defect);
  }
  for (std::size_t k = 0; k < vs.size(); ++k) {
    const double r0 = runs[k].d / std::sqrt(alphas[0]);
    const double r1 = runs[vs.size() + k].d / std::sqrt(alphas[1]);
    c.require(std::abs(r0 / r1 - 1.0) <= 0.10,
              "v=" + fmt("%g", vs[k]) + ": " + fmt("%.4f", r0) + " vs " +
                  fmt("%.4f", r1));
    c.note("v=" + fmt("%g", vs[k]) + ": ratio=" + fmt("%.3f", r0 / r1));
  }
  return c;
}

// ---------------------------------------------------------------- check 9
Check kink_count_consistency() {
  Check c;
  if (g_front_runs.empty()) {
    c.require(false, "needs the Landau-Zener runs (run check 6 first)");
    return c;
  }
  for (const auto& q : g_front_runs) {
    const double rel = q.d / q.kink_density - 1.0;
    c.require(std::abs(rel) <= 0.05,
              "v=" + fmt("%g", q.v) + ": d/kinks=" + fmt("%.4f", 1.0 + rel));
    c.note("v=" + fmt("%g", q.v) + ": d/kinks=" + fmt("%.4f", 1.0 + rel));
  }
  return c;
}

// --------------------------------------------------------------- check 10
Check numerics_hygiene() {
  Check c;

  // Unitarity across every accepted dynamical run above.
  if (g_run_defects.empty()) {
    c.note("drift: no quench checks ran in this invocation");
  } else {
    double worst = 0.0;
    for (double defect : g_run_defects) {
      worst = std::max(worst, defect);
    }
    c.require(worst <= 1e-6, "worst drift " + fmt("%.2e", worst));
    c.note("worst drift " + fmt("%.2e", worst) + " over " +
           std::to_string(g_run_defects.size()) + " runs");
  }

  // Step-doubling convergence on a full quench.
  {
    const ChainGeometry geom(128);
    const MovingTanhFront front{1.0 / 16, 4.0};
    Rk4Config coarse;
    coarse.threads = 2;
    Rk4Config fine = coarse;
    fine.dt = coarse.dt / 2;
    const double d1 = run_quench(geom, front, coarse).d;
    const double d2 = run_quench(geom, front, fine).d;
    c.require(std::abs(d1 - d2) <= 0.01 * std::abs(d2),
              "dt halving moved d by " + fmt("%.3f%%", 100 * (d1 - d2) / d2));
    c.note("dt halving moves d by " + fmt("%.1e", std::abs(d1 - d2) / d2) +
           " relative");
  }

  // Pfaffian identity on random antisymmetric matrices.
  {
    std::mt19937 gen(99);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    bool ok = true;
    for (int dim = 2; dim <= 40; dim += 2) {
      Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
      for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
          m(i, j) = dist(gen);
          m(j, i) = -m(i, j);
        }
      }
      const double pf = pfaffian(m);
      const double det = m.fullPivLu().determinant();
      ok = ok && std::abs(pf * pf - det) <= 1e-8 * std::abs(det);
    }
    c.require(ok, "Pf^2 != det");
    c.note("Pf^2=det up to dim 40");
  }

  // Quadrature against the closed form wherever the latter is accurate.
  {
    bool ok = true;
    double worst_rel = 0.0;
    for (double alpha : {1.0 / 32, 1.0 / 64, 1.0 / 128}) {
      for (double v : {3.0, 4.0, 6.0, 10.0}) {
        const auto p = predict_kink_density(alpha, v);
        if (p.tau_q_tilde >= 10.0) {
          const double rel = std::abs(p.d_numeric / p.d_closed - 1.0);
          worst_rel = std::max(worst_rel, rel);
          ok = ok && rel <= 0.02;
        }
      }
    }
    c.require(ok, "LZ quadrature vs closed form");
    c.note("LZ quadrature within " + fmt("%.2e", worst_rel));
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = std::atoi(argv[i + 1]);
    }
  }

  struct Entry {
    int id;
    const char* title;
    std::function<Check()> run;
  };
  const std::vector<Entry> checks = {
      {1, "free-fermion pipeline matches 2^N exact diagonalization", oracle_equivalence},
      {2, "static front gap equals sqrt(8 alpha)", gap_law},
      {3, "front spectrum follows sqrt(8 m alpha)", spectrum_law},
      {4, "magnetization profiles collapse in rescaled position", front_profile_collapse},
      {5, "slow front excites nothing below the threshold", below_threshold},
      {6, "fast-front kink density matches the Landau-Zener integral", landau_zener_match},
      {7, "homogeneous ramp reproduces the KZ scaling and prefactor", homogeneous_baseline},
      {8, "rescaled densities collapse across slopes", rescaled_collapse},
      {9, "quasiparticle and kink counts agree at the quench end", kink_count_consistency},
      {10, "numerics hygiene: drift, convergence, Pfaffian, quadrature", numerics_hygiene},
  };

  int failures = 0;
  int executed = 0;
  const auto suite_start = std::chrono::steady_clock::now();
  for (const auto& entry : checks) {
    if (only != 0 && entry.id != only &&
        !(only == 9 && entry.id == 6)) {  // 9 consumes 6's runs
      continue;
    }
    ++executed;
    const auto start = std::chrono::steady_clock::now();
    Check result;
    try {
      result = entry.run();
    } catch (const std::exception& e) {
      result.pass = false;
      result.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::printf("[%s] %2d. %s (%.1f s)%s%s\n", result.pass ? "PASS" : "FAIL",
                entry.id, entry.title, secs, result.detail.empty() ? "" : " -- ",
                result.detail.c_str());
    std::fflush(stdout);
    if (!result.pass) {
      ++failures;
    }
  }
  const double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                    suite_start)
          .count();
  std::printf("%d/%d checks passed in %.1f s\n", executed - failures, executed,
              total);
  return failures;
}
