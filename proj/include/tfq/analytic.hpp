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

#ifndef TFQ_ANALYTIC_HPP
#define TFQ_ANALYTIC_HPP

#include <numeric>
#include <stdexcept>

#include "tfq/hermite.hpp"

namespace tfq {

/// Exact rational number; scaling exponents are carried in this form so the
/// exponent identities hold without floating-point error.
struct Rational {
  long long num = 0;
  long long den = 1;

  constexpr Rational() = default;
  constexpr Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d);

  double value() const { return static_cast<double>(num) / den; }
  friend Rational operator+(Rational a, Rational b);
  friend Rational operator-(Rational a, Rational b);
  friend Rational operator*(Rational a, Rational b);
  friend Rational operator/(Rational a, Rational b);
  friend Rational operator-(Rational a) { return Rational(-a.num, a.den); }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
};

/// Equilibrium critical exponents of the transition being crossed:
/// correlation length xi ~ |eps|^-nu, gap ~ |eps|^(z nu), in dim dimensions.
struct CriticalExponents {
  Rational z{1};
  Rational nu{1};
  int dim = 1;

  /// Quantum Ising chain: z = nu = 1, one dimension.
  static CriticalExponents ising() { return CriticalExponents{}; }
};

/// Freeze-out scales of a linear quench eps(t) = -t/tau_q. Magnitudes carry
/// unit prefactors (the scaling theory fixes exponents only):
///   eps_hat = tau_q^(-1/(z nu + 1)),  t_hat  = tau_q^(z nu/(z nu + 1)),
///   xi_hat  = tau_q^(nu/(z nu + 1)),  d      = tau_q^(-dim nu/(z nu + 1)).
struct KZScales {
  double eps_hat = 0, t_hat = 0, xi_hat = 0, d_scale = 0;
  Rational eps_exponent, t_exponent, xi_exponent, d_exponent;
};

KZScales kz_scales(const CriticalExponents& exps, double tau_q);

/// Scales of the static "transition in space" eps(n) = alpha (n - n_c):
/// order-parameter penetration depth, rounded-off gap, and the front
/// velocity below which excitation is suppressed.
struct SpaceKZScales {
  double xi_hat = 0, delta_n = 0, gap_hat = 0, v_hat = 0;
  Rational xi_exponent;    // in alpha: -nu/(1+nu)
  Rational gap_exponent;   // in alpha: z nu/(1+nu)
  Rational v_exponent;     // in alpha: nu(z-1)/(1+nu)
};

SpaceKZScales space_kz_scales(const CriticalExponents& exps, double alpha);

/// Threshold front velocity in its two equivalent parametrizations, plus the
/// slope at which a quench of time tau_q stops being effectively homogeneous.
/// For the Ising preset the magnitude is the calibrated quasiparticle speed
/// v_hat = 2; otherwise magnitudes carry unit prefactors.
struct ThresholdVelocity {
  double v_hat = 0;
  double tau_q_hat = 0;
  bool calibrated = false;       // true when the Ising value 2 is used
  Rational alpha_exponent;       // v_hat ~ alpha^(nu(z-1)/(1+nu))
  Rational tau_q_exponent;       // v_hat ~ tau_q^(-(z-1)nu/(z nu+1))
  Rational tau_q_hat_exponent;   // tau_q_hat ~ alpha^(-(z nu+1)/(1+nu))
};

ThresholdVelocity threshold_velocity(const CriticalExponents& exps,
                                     double alpha);

/// Low-energy spectrum of the static front, omega_m = sqrt(8 m alpha).
double static_front_spectrum(double alpha, int m);

/// Co-moving eigenmode data of a front moving at v < 2:
///   omega_m = (1 - v^2/4)^(3/4) sqrt(8 alpha m),
///   relative phase arcsin(v/2)/2 between the two oscillator components,
///   and the factor multiplying (n - v t) in the rescaled position,
///   (1 - v^2/4)^(-1/4) sqrt(alpha). Reduces to the static results at v = 0.
/// Throws std::domain_error for v >= 2, where no stationary co-moving modes
/// exist and the Landau-Zener branch applies instead.
struct MovingFrontMode {
  double omega = 0;
  double phase = 0;
  double length_scale = 0;
};

MovingFrontMode moving_front_modes(double alpha, double v, int m);

/// Depth (1 - v^2/4)^(1/4) alpha^(-1/2) to which ferromagnetic order leaks
/// past a front moving at v < 2; shrinks to zero at the threshold.
double penetration_depth(double alpha, double v);

/// Landau-Zener excitation probability of quasimode k for the effective
/// homogeneous quench of time tau_q_tilde: p_k = exp(-2 pi k^2 tau_q_tilde).
double lz_probability(double k, double tau_q_tilde);

/// Momentum cutoff and quadrature resolution for the kink-density integral.
struct LZConfig {
  double lambda = 1.0;  // ultraviolet cutoff, in (0, pi]
  int k_grid = 2001;    // trapezoid points over [-lambda, lambda]
};

/// Kink density predicted for a front of slope alpha moving at v:
///   d_closed  = (1 - 4/v^2)^(3/4) / (2 pi sqrt(2 tau_q))   for v > 2,
///   d_numeric = trapezoid of p_k/(2 pi) over [-lambda, lambda],
///   d_kzm     = 1/(2 pi sqrt(2 tau_q)), the homogeneous-quench density.
/// Below the threshold (v <= 2) no quasiparticles are produced:
/// below_threshold is set and both d values are zero.
struct KinkDensityPrediction {
  double alpha = 0;
  double v = 0;
  double tau_q = 0;
  double tau_q_tilde = 0;
  double d_closed = 0;
  double d_numeric = 0;
  double d_kzm = 0;
  bool below_threshold = false;
};

KinkDensityPrediction predict_kink_density(double alpha, double v,
                                           const LZConfig& config = {});

}  // namespace tfq

#endif  // TFQ_ANALYTIC_HPP
