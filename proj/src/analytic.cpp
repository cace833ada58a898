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

#include "tfq/analytic.hpp"

#include <cmath>

#include "tfq/chain.hpp"

namespace tfq {

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) {
    throw std::invalid_argument("Rational: zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational operator+(Rational a, Rational b) {
  return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}
Rational operator-(Rational a, Rational b) {
  return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
}
Rational operator*(Rational a, Rational b) {
  return Rational(a.num * b.num, a.den * b.den);
}
Rational operator/(Rational a, Rational b) {
  if (b.num == 0) {
    throw std::invalid_argument("Rational: division by zero");
  }
  return Rational(a.num * b.den, a.den * b.num);
}

KZScales kz_scales(const CriticalExponents& exps, double tau_q) {
  if (tau_q <= 0.0) {
    throw std::invalid_argument("kz_scales: tau_q must be > 0");
  }
  const Rational znu = exps.z * exps.nu;
  const Rational denom = znu + Rational(1);
  KZScales s;
  s.eps_exponent = -Rational(1) / denom;
  s.t_exponent = znu / denom;
  s.xi_exponent = exps.nu / denom;
  s.d_exponent = -(Rational(exps.dim) * exps.nu) / denom;
  s.eps_hat = std::pow(tau_q, s.eps_exponent.value());
  s.t_hat = std::pow(tau_q, s.t_exponent.value());
  s.xi_hat = std::pow(tau_q, s.xi_exponent.value());
  s.d_scale = std::pow(tau_q, s.d_exponent.value());
  return s;
}

SpaceKZScales space_kz_scales(const CriticalExponents& exps, double alpha) {
  if (alpha <= 0.0) {
    throw std::invalid_argument("space_kz_scales: alpha must be > 0");
  }
  const Rational denom = Rational(1) + exps.nu;
  SpaceKZScales s;
  s.xi_exponent = -exps.nu / denom;
  s.gap_exponent = (exps.z * exps.nu) / denom;
  s.v_exponent = (exps.nu * (exps.z - Rational(1))) / denom;
  s.xi_hat = std::pow(alpha, s.xi_exponent.value());
  s.delta_n = s.xi_hat;
  s.gap_hat = std::pow(alpha, s.gap_exponent.value());
  s.v_hat = std::pow(alpha, s.v_exponent.value());
  return s;
}

ThresholdVelocity threshold_velocity(const CriticalExponents& exps,
                                     double alpha) {
  if (alpha <= 0.0) {
    throw std::invalid_argument("threshold_velocity: alpha must be > 0");
  }
  const Rational znu = exps.z * exps.nu;
  ThresholdVelocity t;
  t.alpha_exponent = (exps.nu * (exps.z - Rational(1))) / (Rational(1) + exps.nu);
  t.tau_q_exponent = -((exps.z - Rational(1)) * exps.nu) / (znu + Rational(1));
  t.tau_q_hat_exponent = -(znu + Rational(1)) / (Rational(1) + exps.nu);
  t.tau_q_hat = std::pow(alpha, t.tau_q_hat_exponent.value());
  if (exps.z == Rational(1) && exps.nu == Rational(1)) {
    // Quasiparticle speed at the Ising critical point.
    t.v_hat = 2.0;
    t.calibrated = true;
  } else {
    t.v_hat = std::pow(alpha, t.alpha_exponent.value());
  }
  return t;
}

double static_front_spectrum(double alpha, int m) {
  if (alpha <= 0.0) {
    throw std::invalid_argument("static_front_spectrum: alpha must be > 0");
  }
  if (m < 0) {
    throw std::invalid_argument("static_front_spectrum: m must be >= 0");
  }
  return std::sqrt(8.0 * m * alpha);
}

MovingFrontMode moving_front_modes(double alpha, double v, int m) {
  if (alpha <= 0.0) {
    throw std::invalid_argument("moving_front_modes: alpha must be > 0");
  }
  if (m < 0) {
    throw std::invalid_argument("moving_front_modes: m must be >= 0");
  }
  if (v < 0.0) {
    throw std::invalid_argument("moving_front_modes: v must be >= 0");
  }
  if (v >= 2.0) {
    throw std::domain_error(
        "moving_front_modes: no stationary co-moving modes at v >= 2; "
        "use the Landau-Zener branch (predict_kink_density)");
  }
  const double factor = 1.0 - 0.25 * v * v;
  MovingFrontMode mode;
  mode.omega = std::pow(factor, 0.75) * std::sqrt(8.0 * alpha * m);
  mode.phase = 0.5 * std::asin(0.5 * v);
  mode.length_scale = std::pow(factor, -0.25) * std::sqrt(alpha);
  return mode;
}

double penetration_depth(double alpha, double v) {
  if (alpha <= 0.0) {
    throw std::invalid_argument("penetration_depth: alpha must be > 0");
  }
  if (v < 0.0 || v >= 2.0) {
    throw std::domain_error("penetration_depth: defined for 0 <= v < 2");
  }
  return std::pow(1.0 - 0.25 * v * v, 0.25) / std::sqrt(alpha);
}

double lz_probability(double k, double tau_q_tilde) {
  if (tau_q_tilde <= 0.0) {
    throw std::invalid_argument("lz_probability: tau_q_tilde must be > 0");
  }
  return std::exp(-2.0 * M_PI * k * k * tau_q_tilde);
}

KinkDensityPrediction predict_kink_density(double alpha, double v,
                                           const LZConfig& config) {
  if (alpha <= 0.0) {
    throw std::invalid_argument("predict_kink_density: alpha must be > 0");
  }
  if (v <= 0.0) {
    throw std::invalid_argument("predict_kink_density: v must be > 0");
  }
  if (config.lambda <= 0.0 || config.lambda > M_PI) {
    throw std::invalid_argument("predict_kink_density: lambda outside (0, pi]");
  }
  if (config.k_grid < 3) {
    throw std::invalid_argument("predict_kink_density: k_grid too coarse");
  }

  KinkDensityPrediction p;
  p.alpha = alpha;
  p.v = v;
  p.tau_q = effective_quench_time(alpha, v);
  p.d_kzm = 1.0 / (2.0 * M_PI * std::sqrt(2.0 * p.tau_q));
  if (v <= 2.0) {
    p.below_threshold = true;
    return p;
  }

  const double suppression = std::pow(1.0 - 4.0 / (v * v), 0.75);
  p.tau_q_tilde = p.tau_q * std::pow(1.0 - 4.0 / (v * v), -1.5);
  p.d_closed = suppression * p.d_kzm;

  // Trapezoid quadrature of p_k / (2 pi) over [-lambda, lambda].
  const int grid = config.k_grid;
  const double h = 2.0 * config.lambda / (grid - 1);
  double sum = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double k = -config.lambda + i * h;
    const double w = (i == 0 || i == grid - 1) ? 0.5 : 1.0;
    sum += w * lz_probability(k, p.tau_q_tilde);
  }
  p.d_numeric = sum * h / (2.0 * M_PI);
  return p;
}

}  // namespace tfq
