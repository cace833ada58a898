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

#include "tfq/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "tfq/covariance.hpp"

namespace tfq {

void rhs(const Eigen::VectorXd& g, const Eigen::MatrixXcd& u,
         const Eigen::MatrixXcd& v, Eigen::MatrixXcd& du, Eigen::MatrixXcd& dv) {
  const Eigen::Index n = u.rows();
  if (g.size() != n || v.rows() != n || u.cols() != v.cols()) {
    throw std::invalid_argument("rhs: inconsistent dimensions");
  }
  const Eigen::MatrixXcd up = u + v;
  const Eigen::MatrixXcd um = u - v;
  const Eigen::VectorXcd g2 = (2.0 * g).cast<std::complex<double>>();

  Eigen::MatrixXcd a_um = g2.asDiagonal() * um;
  a_um.bottomRows(n - 1) -= 2.0 * um.topRows(n - 1);
  Eigen::MatrixXcd at_up = g2.asDiagonal() * up;
  at_up.topRows(n - 1) -= 2.0 * up.bottomRows(n - 1);

  const std::complex<double> minus_i(0.0, -1.0);
  du = (0.5 * minus_i) * (a_um + at_up);
  dv = (0.5 * minus_i) * (a_um - at_up);
}

void rhs(const EvolvedState& state, const FieldProfile& profile,
         const ChainGeometry& geometry, Eigen::MatrixXcd& du,
         Eigen::MatrixXcd& dv) {
  rhs(field_vector(profile, geometry, state.t), state.u, state.v, du, dv);
}

namespace {

// The integrator works on four real planes holding Re/Im of u± = u ± v.
// Each plane is (n+2) x modes with zero ghost rows at 0 and n+1, so the
// nearest-neighbour stencil needs no boundary branches. In this split the
// equations of motion are four real stencils:
//   d(Re u+)_i =  (2g_i Im u-_i - 2 Im u-_{i-1})     d(Im u+) = -(...Re u-)
//   d(Re u-)_i =  (2g_i Im u+_i - 2 Im u+_{i+1})     d(Im u-) = -(...Re u+)

struct Planes {
  double* pr;  // Re u+
  double* pi;  // Im u+
  double* mr;  // Re u-
  double* mi;  // Im u-
};

// The four stencils of one stage, fused into a single sweep so the field row
// and source planes are streamed once:
//   kp_r =  g_i src.mi_i - 2 src.mi_{i-1}    kp_i = -(g_i src.mr_i - 2 src.mr_{i-1})
//   km_r =  g_i src.pi_i - 2 src.pi_{i+1}    km_i = -(g_i src.pr_i - 2 src.pr_{i+1})

// Each helper below fuses the two stencils that share a shift direction:
// the u+ planes use the i-1 neighbour of the u- source planes and vice
// versa. Keeping the stream count per loop moderate is what lets the
// vectorizer pick these up. All pointers are pre-offset to the loop start;
// the stencil reads i+Off stay inside the buffers by construction.

// acc = base + c1*k, next = base + c2*k (opening stage, base == y).
template <int Off>
inline void pair_open(int cnt, const double* __restrict g,
                      const double* __restrict sr, const double* __restrict si,
                      const double* __restrict b1, const double* __restrict b2,
                      double c1, double* __restrict a1, double* __restrict a2,
                      double c2, double* __restrict n1, double* __restrict n2) {
  for (int i = 0; i < cnt; ++i) {
    const double k_r = g[i] * si[i] - 2.0 * si[i + Off];
    const double k_i = 2.0 * sr[i + Off] - g[i] * sr[i];
    a1[i] = b1[i] + c1 * k_r;
    a2[i] = b2[i] + c1 * k_i;
    n1[i] = b1[i] + c2 * k_r;
    n2[i] = b2[i] + c2 * k_i;
  }
}

// acc += c1*k, next = base + c2*k (middle stages).
template <int Off>
inline void pair_middle(int cnt, const double* __restrict g,
                        const double* __restrict sr, const double* __restrict si,
                        double* __restrict a1, double* __restrict a2, double c1,
                        const double* __restrict b1, const double* __restrict b2,
                        double c2, double* __restrict n1, double* __restrict n2) {
  for (int i = 0; i < cnt; ++i) {
    const double k_r = g[i] * si[i] - 2.0 * si[i + Off];
    const double k_i = 2.0 * sr[i + Off] - g[i] * sr[i];
    a1[i] += c1 * k_r;
    a2[i] += c1 * k_i;
    n1[i] = b1[i] + c2 * k_r;
    n2[i] = b2[i] + c2 * k_i;
  }
}

// out = acc + c*k (closing stage).
template <int Off>
inline void pair_close(int cnt, const double* __restrict g,
                       const double* __restrict sr, const double* __restrict si,
                       const double* __restrict a1, const double* __restrict a2,
                       double c, double* __restrict o1, double* __restrict o2) {
  for (int i = 0; i < cnt; ++i) {
    const double k_r = g[i] * si[i] - 2.0 * si[i + Off];
    const double k_i = 2.0 * sr[i + Off] - g[i] * sr[i];
    o1[i] = a1[i] + c * k_r;
    o2[i] = a2[i] + c * k_i;
  }
}

// The RK4 step is swept in site tiles so that one tile's bookkeeping
// (y copy, two stage buffers, accumulator) stays L1-resident; the stage
// ranges shrink by one site per stage from a 3-site halo, recomputing the
// halo instead of communicating it. Results are bit-identical to an
// untiled sweep because every stage value is computed from the same inputs
// by the same expression.
constexpr int kTileSites = 128;
constexpr int kTileHalo = 4;  // y-input halo per side
// Local buffers span sites [out_lo - halo, out_hi + halo] plus one slot for
// the edge-clamp writes.
constexpr int kTileWidth = kTileSites + 2 * kTileHalo + 2;

// Thread scratch: local y copy, accumulator and two stage buffers.
struct Scratch {
  std::vector<double> data;
  Planes yloc{}, acc{}, s1{}, s2{};
  std::array<std::array<double, kTileHalo>, 4> strip{};  // saved y edge

  Scratch() : data(16 * kTileWidth, 0.0) {
    double* p = data.data();
    auto planes = [&p]() {
      Planes planes_out{p, p + kTileWidth, p + 2 * kTileWidth,
                        p + 3 * kTileWidth};
      p += 4 * kTileWidth;
      return planes_out;
    };
    yloc = planes();
    acc = planes();
    s1 = planes();
    s2 = planes();
  }
};

// One classical RK4 step of one mode column. g0/gh/g1 hold 2*g at the step
// start, midpoint and end, indexed by site with ghost slot 0; the planes use
// the same indexing.
void rk4_column_step(int n, double dt, const double* g0, const double* gh,
                     const double* g1, const Planes& y, Scratch& s) {
  const double c2 = 0.5 * dt, c3 = dt / 3.0, c6 = dt / 6.0;
  double* const yg[4] = {y.pr, y.pi, y.mr, y.mi};
  double* const yl[4] = {s.yloc.pr, s.yloc.pi, s.yloc.mr, s.yloc.mi};
  double* const st1[4] = {s.s1.pr, s.s1.pi, s.s1.mr, s.s1.mi};
  double* const st2[4] = {s.s2.pr, s.s2.pi, s.s2.mr, s.s2.mi};

  for (int out_lo = 1; out_lo <= n; out_lo += kTileSites) {
    const int out_hi = std::min(n, out_lo + kTileSites - 1);
    const int base = out_lo - kTileHalo;  // global site of local slot 0

    // Local y copy: strip values for the sites the previous tile already
    // overwrote, the untouched global planes elsewhere, zero beyond the
    // chain ends.
    const int tile_len = out_hi - out_lo + 1;
    const int body_len = std::min(n, out_hi + kTileHalo) - out_lo + 1;
    for (int p = 0; p < 4; ++p) {
      for (int l = 0; l < kTileHalo; ++l) {
        yl[p][l] = (base + l >= 1) ? s.strip[p][l] : 0.0;
      }
      std::copy_n(yg[p] + out_lo, body_len, yl[p] + kTileHalo);
      std::fill(yl[p] + kTileHalo + body_len, yl[p] + kTileWidth, 0.0);
      // Save this tile's right edge before pass 4 overwrites it.
      for (int l = 0; l < kTileHalo; ++l) {
        s.strip[p][l] = yl[p][tile_len + l];
      }
    }

    // Stage sweep; pass p covers sites [out_lo-4+p, out_hi+4-p] clamped to
    // the chain, with stage-buffer slots zeroed where the clamp bites.
    auto bounds = [&](int pass, int& lo, int& hi, int& start, int& cnt) {
      lo = std::max(1, out_lo - kTileHalo + pass);
      hi = std::min(n, out_hi + kTileHalo - pass);
      start = lo - base;  // local slot of the first site
      cnt = hi - lo + 1;
    };
    auto clamp_edges = [&](double* const planes[4], int lo, int hi, int start,
                           int cnt) {
      for (int p = 0; p < 4; ++p) {
        if (lo == 1) planes[p][start - 1] = 0.0;
        if (hi == n) planes[p][start + cnt] = 0.0;
      }
    };

    int lo, hi, at, cnt;
    bounds(1, lo, hi, at, cnt);
    pair_open<-1>(cnt, g0 + lo, yl[2] + at, yl[3] + at, yl[0] + at, yl[1] + at,
                  c6, s.acc.pr + at, s.acc.pi + at, c2, st1[0] + at,
                  st1[1] + at);
    pair_open<+1>(cnt, g0 + lo, yl[0] + at, yl[1] + at, yl[2] + at, yl[3] + at,
                  c6, s.acc.mr + at, s.acc.mi + at, c2, st1[2] + at,
                  st1[3] + at);
    clamp_edges(st1, lo, hi, at, cnt);

    bounds(2, lo, hi, at, cnt);
    pair_middle<-1>(cnt, gh + lo, st1[2] + at, st1[3] + at, s.acc.pr + at,
                    s.acc.pi + at, c3, yl[0] + at, yl[1] + at, c2, st2[0] + at,
                    st2[1] + at);
    pair_middle<+1>(cnt, gh + lo, st1[0] + at, st1[1] + at, s.acc.mr + at,
                    s.acc.mi + at, c3, yl[2] + at, yl[3] + at, c2, st2[2] + at,
                    st2[3] + at);
    clamp_edges(st2, lo, hi, at, cnt);

    bounds(3, lo, hi, at, cnt);
    pair_middle<-1>(cnt, gh + lo, st2[2] + at, st2[3] + at, s.acc.pr + at,
                    s.acc.pi + at, c3, yl[0] + at, yl[1] + at, dt, st1[0] + at,
                    st1[1] + at);
    pair_middle<+1>(cnt, gh + lo, st2[0] + at, st2[1] + at, s.acc.mr + at,
                    s.acc.mi + at, c3, yl[2] + at, yl[3] + at, dt, st1[2] + at,
                    st1[3] + at);
    clamp_edges(st1, lo, hi, at, cnt);

    bounds(4, lo, hi, at, cnt);
    pair_close<-1>(cnt, g1 + lo, st1[2] + at, st1[3] + at, s.acc.pr + at,
                   s.acc.pi + at, c6, y.pr + lo, y.pi + lo);
    pair_close<+1>(cnt, g1 + lo, st1[0] + at, st1[1] + at, s.acc.mr + at,
                   s.acc.mi + at, c6, y.mr + lo, y.mi + lo);
  }
}

struct PlaneState {
  Eigen::MatrixXd pr, pi, mr, mi;  // (n+2) x modes, ghost rows zero

  PlaneState(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
    const Eigen::Index n = u.rows();
    const Eigen::Index m = u.cols();
    pr.setZero(n + 2, m);
    pi.setZero(n + 2, m);
    mr.setZero(n + 2, m);
    mi.setZero(n + 2, m);
    pr.middleRows(1, n) = (u + v).real();
    pi.middleRows(1, n) = (u + v).imag();
    mr.middleRows(1, n) = (u - v).real();
    mi.middleRows(1, n) = (u - v).imag();
  }

  void store(Eigen::MatrixXcd& u, Eigen::MatrixXcd& v) const {
    const Eigen::Index n = pr.rows() - 2;
    const Eigen::Index m = pr.cols();
    u.resize(n, m);
    v.resize(n, m);
    u.real() = 0.5 * (pr.middleRows(1, n) + mr.middleRows(1, n));
    u.imag() = 0.5 * (pi.middleRows(1, n) + mi.middleRows(1, n));
    v.real() = 0.5 * (pr.middleRows(1, n) - mr.middleRows(1, n));
    v.imag() = 0.5 * (pi.middleRows(1, n) - mi.middleRows(1, n));
  }

  Planes column(Eigen::Index c) {
    return Planes{pr.col(c).data(), pi.col(c).data(), mr.col(c).data(),
                  mi.col(c).data()};
  }

  // Worst |column norm - 1| over modes; cheap necessary unitarity condition.
  double norm_drift() const {
    const Eigen::Index m = pr.cols();
    double worst = 0.0;
    for (Eigen::Index c = 0; c < m; ++c) {
      const double norm2 = 0.5 * (pr.col(c).squaredNorm() + pi.col(c).squaredNorm() +
                                  mr.col(c).squaredNorm() + mi.col(c).squaredNorm());
      worst = std::max(worst, std::abs(norm2 - 1.0));
    }
    return worst;
  }
};

double step_size_bound(const FieldProfile& profile) {
  const double g_max = max_field(profile);
  // The hopping term alone bounds the spectrum away from zero, so cap the
  // step even for vanishing fields.
  return (g_max > 0.0) ? std::min(0.05 / g_max, 0.2) : 0.2;
}

}  // namespace

void evolve_modes(Eigen::MatrixXcd& u, Eigen::MatrixXcd& v,
                  const FieldProfile& profile, const ChainGeometry& geometry,
                  double t_from, double t_to, const Rk4Config& config,
                  EvolveReport* report) {
  const int n = geometry.n_sites;
  if (u.rows() != n || v.rows() != n || u.cols() != v.cols()) {
    throw std::invalid_argument("evolve_modes: mode matrices do not match chain");
  }
  if (config.dt <= 0.0) {
    throw std::invalid_argument("evolve_modes: dt must be > 0");
  }
  if (config.dt > step_size_bound(profile)) {
    throw std::invalid_argument(
        "evolve_modes: dt = " + std::to_string(config.dt) +
        " exceeds 0.05/max_g = " + std::to_string(step_size_bound(profile)));
  }
  if (t_to < t_from) {
    throw std::invalid_argument("evolve_modes: t_to before t_from");
  }
  if (report) {
    *report = EvolveReport{};
  }
  const double duration = t_to - t_from;
  if (duration == 0.0) {
    return;
  }
  const long long steps =
      std::max<long long>(1, static_cast<long long>(std::ceil(duration / config.dt - 1e-12)));
  const double dt = duration / steps;
  const int modes = static_cast<int>(u.cols());
  const int threads = std::clamp(config.threads, 1, modes);
  const int stride = std::max(1, config.checkpoint_stride);

  PlaneState state(u, v);
  std::vector<Scratch> scratch(threads);

  // Field table for one chunk: column 2j = 2*g(t_j), column 2j+1 = midpoint,
  // shared by the k1/k2-k3/k4 stages of step j.
  Eigen::MatrixXd table(n + 2, 2 * stride + 1);
  table.setZero();

  double max_drift = 0.0;
  long long done = 0;
  while (done < steps) {
    const int chunk = static_cast<int>(std::min<long long>(stride, steps - done));
    for (int j = 0; j <= 2 * chunk; ++j) {
      const double t = t_from + (done + 0.5 * j) * dt;
      if (j == 2 * chunk && done + chunk == steps) {
        // Evaluate the field exactly at t_to, untouched by rounding.
        table.col(j).segment(1, n) = 2.0 * field_vector(profile, geometry, t_to);
      } else {
        table.col(j).segment(1, n) = 2.0 * field_vector(profile, geometry, t);
      }
    }

    auto worker = [&](int tid) {
      Scratch& s = scratch[tid];
      const int per = (modes + threads - 1) / threads;
      const int c0 = tid * per;
      const int c1 = std::min(modes, c0 + per);
      constexpr int kBlock = 8;
      for (int b0 = c0; b0 < c1; b0 += kBlock) {
        const int b1 = std::min(c1, b0 + kBlock);
        for (int j = 0; j < chunk; ++j) {
          const double* g0 = table.col(2 * j).data();
          const double* gh = table.col(2 * j + 1).data();
          const double* g1 = table.col(2 * j + 2).data();
          for (int c = b0; c < b1; ++c) {
            Planes y = state.column(c);
            rk4_column_step(n, dt, g0, gh, g1, y, s);
          }
        }
      }
    };
    if (threads == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(threads);
      for (int tid = 0; tid < threads; ++tid) {
        pool.emplace_back(worker, tid);
      }
      for (auto& th : pool) {
        th.join();
      }
    }

    done += chunk;
    const double drift = state.norm_drift();
    max_drift = std::max(max_drift, drift);
    if (drift > config.drift_tolerance) {
      throw std::runtime_error(
          "evolve_modes: unitarity drift " + std::to_string(drift) +
          " exceeded tolerance " + std::to_string(config.drift_tolerance) +
          " at t = " + std::to_string(t_from + done * dt) +
          " (decrease dt)");
    }
  }

  state.store(u, v);
  if (report) {
    report->max_drift = max_drift;
    report->steps = steps;
  }
}

EvolvedState evolve(const BogoliubovBasis& initial, const FieldProfile& profile,
                    const ChainGeometry& geometry, const QuenchWindow& window,
                    const Rk4Config& config, EvolveReport* report) {
  EvolvedState state;
  state.u = initial.u.cast<std::complex<double>>();
  state.v = initial.v.cast<std::complex<double>>();
  state.t = window.t_start;
  evolve_modes(state.u, state.v, profile, geometry, window.t_start,
               window.t_end, config, report);
  state.t = window.t_end;
  return state;
}

double unitarity_defect(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
  const Eigen::Index n = u.rows();
  Eigen::MatrixXcd gram = u.adjoint() * u;
  gram.noalias() += v.adjoint() * v;
  gram -= Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd mix = u.transpose() * v;
  mix.noalias() += v.transpose() * u;
  return std::max(gram.cwiseAbs().maxCoeff(), mix.cwiseAbs().maxCoeff());
}

QuenchResult run_quench(const ChainGeometry& geometry, const FieldProfile& profile,
                        const Rk4Config& config, const QuenchOptions& options) {
  QuenchResult result;
  result.n_sites = geometry.n_sites;

  QuenchWindow window;
  double snapshot_time = 0.0;
  if (const auto* front = std::get_if<MovingTanhFront>(&profile)) {
    window = quench_window(*front, geometry, options.margin);
    result.alpha = front->alpha;
    result.v = front->v;
    result.tau_q = effective_quench_time(front->alpha, front->v);
    if (options.snapshot_front) {
      snapshot_time = *options.snapshot_front / front->v;
      if (snapshot_time <= window.t_start || snapshot_time >= window.t_end) {
        throw std::invalid_argument("run_quench: snapshot position outside window");
      }
    }
  } else if (const auto* ramp = std::get_if<HomogeneousRamp>(&profile)) {
    window = quench_window(*ramp);
    result.tau_q = ramp->tau_q;
    if (options.snapshot_front) {
      throw std::invalid_argument(
          "run_quench: correlator snapshots need a moving front");
    }
  } else {
    throw std::invalid_argument(
        "run_quench: profile must be a moving front or homogeneous ramp");
  }

  const BogoliubovBasis initial = solve_static(profile, geometry, window.t_start);
  EvolvedState state;
  state.u = initial.u.cast<std::complex<double>>();
  state.v = initial.v.cast<std::complex<double>>();
  state.t = window.t_start;

  EvolveReport report;
  double max_drift = 0.0;
  if (options.snapshot_front) {
    evolve_modes(state.u, state.v, profile, geometry, window.t_start,
                 snapshot_time, config, &report);
    max_drift = std::max(max_drift, report.max_drift);
    state.t = snapshot_time;

    const MajoranaCovariance cov =
        covariance(state.u, state.v, 10.0 * config.drift_tolerance);
    const auto* front = std::get_if<MovingTanhFront>(&profile);
    int n_ref = options.n_ref;
    if (n_ref <= 0) {
      // Default reference: the site where eps = alpha (n - v t) = -1/2.
      n_ref = std::max(1, static_cast<int>(std::lround(
                              front->v * snapshot_time - 0.5 / front->alpha)));
    }
    result.correlator_profile =
        magnetization_profile(cov, n_ref, options.r_cal);
    result.snapshot_field = field_vector(profile, geometry, snapshot_time);
    result.snapshot_sigma_x.resize(geometry.n_sites);
    for (int site = 1; site <= geometry.n_sites; ++site) {
      result.snapshot_sigma_x[site - 1] = transverse_magnetization(cov, site);
    }

    evolve_modes(state.u, state.v, profile, geometry, snapshot_time,
                 window.t_end, config, &report);
    max_drift = std::max(max_drift, report.max_drift);
  } else {
    evolve_modes(state.u, state.v, profile, geometry, window.t_start,
                 window.t_end, config, &report);
    max_drift = report.max_drift;
  }
  state.t = window.t_end;

  const BogoliubovBasis final_basis =
      solve_static(profile, geometry, window.t_end);
  result.d = excitation_density(state.u, state.v, final_basis);
  result.kink_density =
      kink_density(covariance(state.u, state.v, 10.0 * config.drift_tolerance));
  result.unitarity_defect =
      std::max(max_drift, unitarity_defect(state.u, state.v));
  return result;
}

}  // namespace tfq
