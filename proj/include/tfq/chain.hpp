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

#ifndef TFQ_CHAIN_HPP
#define TFQ_CHAIN_HPP

#include <variant>

#include <Eigen/Core>

namespace tfq {

/// Open transverse-field Ising chain of N sites.
///
/// Site indices are 1-based throughout the public interface, matching the
/// usual Hamiltonian convention H = -sum_{n=1}^{N} g_n sx_n
/// - sum_{n=1}^{N-1} sz_n sz_{n+1}. Bonds couple n and n+1 for n <= N-1;
/// there is no wraparound term.
struct ChainGeometry {
  int n_sites = 0;

  explicit ChainGeometry(int n);
  bool contains(int n) const { return n >= 1 && n <= n_sites; }
};

/// Spatially uniform transverse field g.
struct Uniform {
  double g = 1.0;
};

/// Uniform field ramped linearly in time at rate 1/tau_q:
/// g(t) = g_start - t/tau_q, clamped to [g_end, g_start].
/// With the defaults (g_start = 2, g_end = 0) the critical point g = 1 is
/// crossed at t = tau_q and the local distance from criticality is
/// eps(t) = g(t) - 1 = -(t - tau_q)/tau_q.
struct HomogeneousRamp {
  double tau_q = 1.0;
  double g_start = 2.0;
  double g_end = 0.0;
};

/// Static smooth front g_n = 1 + tanh[alpha (n - n_c)]: ferromagnetic
/// (g < 1) for n < n_c, paramagnetic (g > 1) for n > n_c.
struct StaticTanhFront {
  double alpha = 0.0;  // slope of the field at the front, > 0
  double n_c = 0.0;    // front position, in (fractional) site units
};

/// Moving smooth front g_n(t) = 1 + tanh[alpha (n - v t)]: the critical
/// point n_c(t) = v t sweeps the chain left to right, converting the
/// paramagnet ahead of it into a ferromagnet behind it.
struct MovingTanhFront {
  double alpha = 0.0;  // slope at the front, > 0
  double v = 0.0;      // front velocity, sites per unit time, >= 0
};

using FieldProfile =
    std::variant<Uniform, HomogeneousRamp, StaticTanhFront, MovingTanhFront>;

/// Time window over which a quench is integrated, chosen so the field is
/// saturated (within 2 exp(-2 margin) of its asymptote on every site) at
/// both ends.
struct QuenchWindow {
  double t_start = 0.0;
  double t_end = 0.0;
  double margin = 0.0;

  double duration() const { return t_end - t_start; }
};

/// Field value g_n(t). Throws std::out_of_range unless 1 <= n <= N.
double field_at(const FieldProfile& profile, const ChainGeometry& geometry,
                int n, double t);

/// All N field values at time t, ordered by site.
Eigen::VectorXd field_vector(const FieldProfile& profile,
                             const ChainGeometry& geometry, double t);

/// Linearized dimensionless distance from criticality at (n, t):
/// alpha (n - n_c) for fronts, g - 1 for uniform fields and ramps.
/// Negative values are ferromagnetic, positive paramagnetic.
double local_epsilon(const FieldProfile& profile, int n, double t);

/// Effective quench time tau_q = 1/(alpha v) seen by a site as a moving
/// front passes over it. Throws std::invalid_argument for v = 0 (a static
/// front has no quench rate).
double effective_quench_time(double alpha, double v);

/// Largest field magnitude the profile can reach; used to validate
/// integrator step sizes.
double max_field(const FieldProfile& profile);

/// Integration window for a moving front: t_start = (1 - margin/alpha)/v,
/// t_end = (N + margin/alpha)/v, so the front starts margin/alpha sites
/// before site 1 and ends margin/alpha sites past site N.
/// Requires v > 0 and margin >= 0.
QuenchWindow quench_window(const MovingTanhFront& profile,
                           const ChainGeometry& geometry, double margin = 10.0);

/// Integration window for a homogeneous ramp: [0, (g_start - g_end) tau_q],
/// i.e. exactly the ramp duration.
QuenchWindow quench_window(const HomogeneousRamp& profile);

}  // namespace tfq

#endif  // TFQ_CHAIN_HPP
