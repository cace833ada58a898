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

#include "tfq/runner.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "tfq/analytic.hpp"
#include "tfq/covariance.hpp"
#include "tfq/dynamics.hpp"
#include "tfq/observables.hpp"
#include "tfq/static_solver.hpp"

namespace tfq {

namespace {

const std::vector<std::string> kRunColumns = {
    "N",      "alpha",        "v",        "tau_q", "d",
    "kink_density", "d_closed", "d_kzm", "unitarity_defect"};

std::vector<double> run_row(const QuenchResult& q, const RunConfig& cfg) {
  double d_closed = 0.0;
  double d_kzm = 0.0;
  if (q.v > 0.0) {
    const auto pred = predict_kink_density(q.alpha, q.v,
                                           LZConfig{cfg.lambda, cfg.k_grid});
    d_closed = pred.d_closed;
    d_kzm = pred.d_kzm;
  } else {
    d_kzm = 1.0 / (2.0 * M_PI * std::sqrt(2.0 * q.tau_q));
    d_closed = d_kzm;  // a homogeneous ramp is the v -> infinity limit
  }
  return {static_cast<double>(q.n_sites), q.alpha, q.v,
          q.tau_q, q.d, q.kink_density, d_closed, d_kzm, q.unitarity_defect};
}

OutputTable profile_table(const std::string& name, const Eigen::VectorXd& g,
                          const MagnetizationProfile& mag,
                          const Eigen::VectorXd& sigma_x) {
  OutputTable t;
  t.name = name;
  t.columns = {"n", "g_n", "Z_n", "sigma_x", "C_ref"};
  for (int i = 0; i < g.size(); ++i) {
    t.add_row({static_cast<double>(i + 1), g[i], mag.z[i], sigma_x[i],
               mag.c_ref[i]});
  }
  return t;
}

int auto_reference_site(const RunConfig& cfg, const ChainGeometry& geometry) {
  if (cfg.n_ref > 0) {
    return cfg.n_ref;
  }
  double site = 0.5 * geometry.n_sites;
  if (cfg.profile == "static_front") {
    site = *cfg.n_c - 0.5 / *cfg.alpha;  // eps = -1/2 crossing
  }
  return std::clamp(static_cast<int>(std::lround(site)), 1, geometry.n_sites);
}

std::vector<OutputTable> execute_static(const RunConfig& cfg) {
  const ChainGeometry geometry(cfg.n_sites);
  const FieldProfile profile = profile_from_config(cfg);
  const Eigen::VectorXd g = field_vector(profile, geometry, 0.0);
  const BogoliubovBasis basis = solve_static(build_coupling(geometry, g));
  const MajoranaCovariance cov = covariance(basis);

  const MagnetizationProfile mag =
      magnetization_profile(cov, auto_reference_site(cfg, geometry), cfg.r_cal);
  Eigen::VectorXd sigma_x(geometry.n_sites);
  for (int n = 1; n <= geometry.n_sites; ++n) {
    sigma_x[n - 1] = transverse_magnetization(cov, n);
  }

  OutputTable spectrum;
  spectrum.name = "spectrum";
  spectrum.columns = {"m", "omega"};
  for (int m = 0; m < geometry.n_sites; ++m) {
    spectrum.add_row({static_cast<double>(m), basis.omega[m]});
  }
  return {profile_table("profile", g, mag, sigma_x), spectrum};
}

std::vector<OutputTable> execute_quench(const RunConfig& cfg) {
  const ChainGeometry geometry(cfg.n_sites);
  const FieldProfile profile = profile_from_config(cfg);
  Rk4Config integrator;
  integrator.dt = cfg.dt;
  integrator.checkpoint_stride = cfg.checkpoint_stride;
  integrator.drift_tolerance = cfg.drift_tolerance;
  integrator.threads = cfg.jobs;
  QuenchOptions options;
  options.margin = cfg.margin;
  options.snapshot_front = cfg.snapshot_front;
  options.n_ref = cfg.n_ref;
  options.r_cal = cfg.r_cal;

  const QuenchResult q = run_quench(geometry, profile, integrator, options);

  OutputTable result;
  result.name = "result";
  result.columns = kRunColumns;
  result.add_row(run_row(q, cfg));

  std::vector<OutputTable> tables = {result};
  if (q.correlator_profile) {
    tables.push_back(profile_table("snapshot", q.snapshot_field,
                                   *q.correlator_profile, q.snapshot_sigma_x));
  }
  return tables;
}

std::vector<OutputTable> execute_scan(const RunConfig& cfg) {
  const ChainGeometry geometry(cfg.n_sites);

  struct GridPoint {
    FieldProfile profile;
    std::string label;
  };
  std::vector<GridPoint> points;
  if (cfg.profile == "moving_front") {
    for (double alpha : cfg.scan.alphas) {
      for (double v : cfg.scan.vs) {
        points.push_back({MovingTanhFront{alpha, v},
                          "alpha=" + std::to_string(alpha) +
                              " v=" + std::to_string(v)});
      }
    }
  } else {
    for (double tau_q : cfg.scan.tau_qs) {
      points.push_back({HomogeneousRamp{tau_q, cfg.g_start.value_or(2.0),
                                        cfg.g_end.value_or(0.0)},
                        "tau_q=" + std::to_string(tau_q)});
    }
  }
  if (points.empty()) {
    throw std::invalid_argument("scan: empty grid");
  }

  Rk4Config integrator;
  integrator.dt = cfg.dt;
  integrator.checkpoint_stride = cfg.checkpoint_stride;
  integrator.drift_tolerance = cfg.drift_tolerance;
  integrator.threads = 1;  // parallelism lives across grid points
  QuenchOptions options;
  options.margin = cfg.margin;
  options.r_cal = cfg.r_cal;

  std::vector<std::vector<double>> rows(points.size());
  std::atomic<std::size_t> cursor{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  auto work = [&]() {
    while (true) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= points.size()) {
        return;
      }
      try {
        const QuenchResult q =
            run_quench(geometry, points[i].profile, integrator, options);
        rows[i] = run_row(q, cfg);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) {
          first_error = std::make_exception_ptr(std::runtime_error(
              "scan grid point " + std::to_string(i) + " (" + points[i].label +
              "): " + e.what()));
        }
        return;
      }
    }
  };

  const int workers =
      std::min<std::size_t>(std::max(cfg.jobs, 1), points.size());
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) {
      pool.emplace_back(work);
    }
    for (auto& th : pool) {
      th.join();
    }
  }
  if (first_error) {
    std::rethrow_exception(first_error);
  }

  OutputTable table;
  table.name = "scan";
  table.columns = kRunColumns;
  for (auto& row : rows) {
    table.add_row(std::move(row));
  }
  return {table};
}

std::vector<OutputTable> execute_predict(const RunConfig& cfg) {
  const auto pred =
      predict_kink_density(*cfg.alpha, *cfg.v, LZConfig{cfg.lambda, cfg.k_grid});
  const auto threshold = threshold_velocity(CriticalExponents::ising(), *cfg.alpha);
  OutputTable table;
  table.name = "predict";
  table.columns = {"alpha", "v",     "tau_q", "d_closed",
                   "d_numeric", "d_kzm", "v_hat"};
  table.add_row({pred.alpha, pred.v, pred.tau_q, pred.d_closed, pred.d_numeric,
                 pred.d_kzm, threshold.v_hat});
  return {table};
}

}  // namespace

FieldProfile profile_from_config(const RunConfig& cfg) {
  if (cfg.profile == "uniform") {
    return Uniform{*cfg.g};
  }
  if (cfg.profile == "ramp") {
    return HomogeneousRamp{*cfg.tau_q, cfg.g_start.value_or(2.0),
                           cfg.g_end.value_or(0.0)};
  }
  if (cfg.profile == "static_front") {
    return StaticTanhFront{*cfg.alpha, *cfg.n_c};
  }
  return MovingTanhFront{*cfg.alpha, *cfg.v};
}

std::vector<OutputTable> execute(const RunConfig& cfg) {
  switch (cfg.mode) {
    case RunMode::kStatic:
      return execute_static(cfg);
    case RunMode::kQuench:
      return execute_quench(cfg);
    case RunMode::kScan:
      return execute_scan(cfg);
    case RunMode::kPredict:
      return execute_predict(cfg);
  }
  throw std::logic_error("execute: unreachable");
}

}  // namespace tfq
