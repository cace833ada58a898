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

#ifndef TFQ_HERMITE_HPP
#define TFQ_HERMITE_HPP

#include <cmath>
#include <stdexcept>
#include <type_traits>

namespace tfq {

/// Orthonormal eigenmode psi_m of the unit harmonic oscillator,
/// (1/2)(-d^2/dx^2 + x^2) psi_m = (m + 1/2) psi_m.
///
/// Evaluated with the recurrence on normalized Hermite functions
///   psi_{k+1} = sqrt(2/(k+1)) x psi_k - sqrt(k/(k+1)) psi_{k-1},
/// which is stable (all coefficients are O(1), unlike the raw Hermite
/// polynomial recurrence whose values overflow quickly).
///
/// m = -1 returns 0 by convention; other negative m throw.
template <typename Scalar = double>
Scalar oscillator_mode(int m, Scalar x) {
  static_assert(std::is_floating_point_v<Scalar>);
  if (m == -1) {
    return Scalar(0);
  }
  if (m < 0) {
    throw std::invalid_argument("oscillator_mode: m must be >= -1");
  }
  const Scalar psi0 =
      std::pow(Scalar(M_PI), Scalar(-0.25)) * std::exp(-x * x / Scalar(2));
  if (m == 0) {
    return psi0;
  }
  Scalar prev = Scalar(0);
  Scalar cur = psi0;
  for (int k = 0; k < m; ++k) {
    const Scalar next = std::sqrt(Scalar(2) / (k + 1)) * x * cur -
                        std::sqrt(Scalar(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace tfq

#endif  // TFQ_HERMITE_HPP
