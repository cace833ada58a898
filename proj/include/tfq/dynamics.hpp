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

#ifndef TFQ_DYNAMICS_HPP
#define TFQ_DYNAMICS_HPP

#include <optional>

#include <Eigen/Core>

#include "tfq/chain.hpp"
#include "tfq/observables.hpp"
#include "tfq/static_solver.hpp"

namespace tfq {

/// Instantaneous Gaussian state during a quench: complex mode matrices
/// (u(t), v(t)), column per mode. The state is the vacuum of the
/// quasiparticles they define; Bogoliubov unitarity holds up to the
/// integrator's accumulated drift.
struct EvolvedState {
  Eigen::MatrixXcd u;
  Eigen::MatrixXcd v;
  double t = 0.0;

  int n_sites() const { return static_cast<int>(u.rows()); }
};

/// Fixed-step classical 4th-order Runge-Kutta integration parameters.
/// The step must satisfy dt <= 0.05 / max_n g_n(t) over the run; drift is
/// sampled every checkpoint_stride steps and the run aborts when the
/// Bogoliubov column norms deviate by more than drift_tolerance.
struct Rk4Config {
  double dt = 0.005;
  int checkpoint_stride = 512;
  double drift_tolerance = 1e-6;
  int threads = 1;
};

/// Integration diagnostics.
struct EvolveReport {
  double max_drift = 0.0;  // worst sampled column-norm deviation
  long long steps = 0;
};

/// Time derivative of the mode matrices under the instantaneous field g:
///   i du+/dt = A u-,  i du-/dt = A^T u+,  u± = u ± v,
/// with A the coupling matrix of g. Reference implementation used to
/// validate the fused integration kernel.
void rhs(const Eigen::VectorXd& g, const Eigen::MatrixXcd& u,
         const Eigen::MatrixXcd& v, Eigen::MatrixXcd& du,
         Eigen::MatrixXcd& dv);

/// rhs evaluated for a profile at the state's own time.
void rhs(const EvolvedState& state, const FieldProfile& profile,
         const ChainGeometry& geometry, Eigen::MatrixXcd& du,
         Eigen::MatrixXcd& dv);

/// Advances complex mode matrices in place from t_from to t_to. The step
/// count is ceil(duration/dt) with the step shrunk to land exactly on t_to.
/// Throws when the drift tolerance is exceeded mid-run (dt too large).
void evolve_modes(Eigen::MatrixXcd& u, Eigen::MatrixXcd& v,
                  const FieldProfile& profile, const ChainGeometry& geometry,
                  double t_from, double t_to, const Rk4Config& config,
                  EvolveReport* report = nullptr);

/// Integrates the quench from the static ground state at window.t_start to
/// window.t_end.
EvolvedState evolve(const BogoliubovBasis& initial, const FieldProfile& profile,
                    const ChainGeometry& geometry, const QuenchWindow& window,
                    const Rk4Config& config, EvolveReport* report = nullptr);

/// Optional mid-run measurement and estimator parameters for run_quench.
struct QuenchOptions {
  double margin = 10.0;                 // saturation margin of the window
  std::optional<double> snapshot_front; // front position for a correlator snapshot
  int n_ref = 0;                        // 0: auto, site where eps = -0.5
  int r_cal = 10;
};

/// Full quench pipeline: ground state of the initial field, RK4 evolution
/// across the window, then quasiparticle density against the final static
/// basis and kink density from the final covariance. The profile must be a
/// MovingTanhFront or HomogeneousRamp.
QuenchResult run_quench(const ChainGeometry& geometry,
                        const FieldProfile& profile, const Rk4Config& config,
                        const QuenchOptions& options = {});

/// max entry of |u^H u + v^H v - I| and |u^T v + v^T u| (the two Bogoliubov
/// unitarity blocks) for complex mode matrices.
double unitarity_defect(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v);

}  // namespace tfq

#endif  // TFQ_DYNAMICS_HPP
