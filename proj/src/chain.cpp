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

#include "tfq/chain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tfq {

ChainGeometry::ChainGeometry(int n) : n_sites(n) {
  if (n < 2) {
    throw std::invalid_argument("ChainGeometry: need at least 2 sites, got " +
                                std::to_string(n));
  }
}

namespace {

double ramp_value(const HomogeneousRamp& r, double t) {
  const double lo = std::min(r.g_start, r.g_end);
  const double hi = std::max(r.g_start, r.g_end);
  return std::clamp(r.g_start - t / r.tau_q, lo, hi);
}

}  // namespace

double field_at(const FieldProfile& profile, const ChainGeometry& geometry,
                int n, double t) {
  if (!geometry.contains(n)) {
    throw std::out_of_range("field_at: site " + std::to_string(n) +
                            " outside 1.." + std::to_string(geometry.n_sites));
  }
  return std::visit(
      [&](const auto& p) -> double {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, Uniform>) {
          return p.g;
        } else if constexpr (std::is_same_v<P, HomogeneousRamp>) {
          return ramp_value(p, t);
        } else if constexpr (std::is_same_v<P, StaticTanhFront>) {
          return 1.0 + std::tanh(p.alpha * (n - p.n_c));
        } else {
          return 1.0 + std::tanh(p.alpha * (n - p.v * t));
        }
      },
      profile);
}

Eigen::VectorXd field_vector(const FieldProfile& profile,
                             const ChainGeometry& geometry, double t) {
  Eigen::VectorXd g(geometry.n_sites);
  for (int n = 1; n <= geometry.n_sites; ++n) {
    g[n - 1] = field_at(profile, geometry, n, t);
  }
  return g;
}

double local_epsilon(const FieldProfile& profile, int n, double t) {
  return std::visit(
      [&](const auto& p) -> double {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, Uniform>) {
          return p.g - 1.0;
        } else if constexpr (std::is_same_v<P, HomogeneousRamp>) {
          return ramp_value(p, t) - 1.0;
        } else if constexpr (std::is_same_v<P, StaticTanhFront>) {
          return p.alpha * (n - p.n_c);
        } else {
          return p.alpha * (n - p.v * t);
        }
      },
      profile);
}

double effective_quench_time(double alpha, double v) {
  if (alpha <= 0.0) {
    throw std::invalid_argument("effective_quench_time: alpha must be > 0");
  }
  if (v == 0.0) {
    throw std::invalid_argument(
        "effective_quench_time: static front (v = 0) has no quench time");
  }
  return 1.0 / (alpha * v);
}

double max_field(const FieldProfile& profile) {
  return std::visit(
      [](const auto& p) -> double {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, Uniform>) {
          return std::abs(p.g);
        } else if constexpr (std::is_same_v<P, HomogeneousRamp>) {
          return std::max(std::abs(p.g_start), std::abs(p.g_end));
        } else {
          return 2.0;  // 1 + tanh is bounded by 2
        }
      },
      profile);
}

QuenchWindow quench_window(const MovingTanhFront& profile,
                           const ChainGeometry& geometry, double margin) {
  if (profile.alpha <= 0.0) {
    throw std::invalid_argument("quench_window: alpha must be > 0");
  }
  if (profile.v <= 0.0) {
    throw std::invalid_argument(
        "quench_window: front must move (v > 0) to define a window");
  }
  if (margin < 0.0) {
    throw std::invalid_argument("quench_window: margin must be >= 0");
  }
  QuenchWindow w;
  w.margin = margin;
  w.t_start = (1.0 - margin / profile.alpha) / profile.v;
  w.t_end = (geometry.n_sites + margin / profile.alpha) / profile.v;
  return w;
}

QuenchWindow quench_window(const HomogeneousRamp& profile) {
  if (profile.tau_q <= 0.0) {
    throw std::invalid_argument("quench_window: tau_q must be > 0");
  }
  if (profile.g_start <= profile.g_end) {
    throw std::invalid_argument("quench_window: ramp must decrease the field");
  }
  QuenchWindow w;
  w.margin = 0.0;
  w.t_start = 0.0;
  w.t_end = (profile.g_start - profile.g_end) * profile.tau_q;
  return w;
}

}  // namespace tfq
