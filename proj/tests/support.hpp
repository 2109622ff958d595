#pragma once

// Test-only helpers: seeded draws and oracles that do not share code paths
// with the library implementation they check.

#include <array>
#include <cmath>
#include <complex>
#include <random>

#include "vstirap/model.hpp"

namespace vstirap::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20021015);
  return engine;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

/// Default parameters: {g0, Delta, kappa, gamma} = 2 pi {2.5, 10, 1.25, 6} MHz,
/// w_c = 35 um, w_p = 44 um, v = 2 m/s.
inline PhysicalParams default_params() { return PhysicalParams{}; }

/// Equal-waist resonant settings: Delta = 0, w_c = w_p = 35 um, Omega_0 = 2 g0.
inline PhysicalParams equal_waist_params() {
  PhysicalParams p;
  p.delta = 0.0;
  p.w_p = p.w_c;
  p.omega0_peak = 2.0 * p.g0_max;
  return p;
}

struct OracleResult {
  std::array<std::array<std::complex<double>, 3>, 3> rho{};
  double p_emit = 0.0;
  double p_spont = 0.0;
};

/// Classical fixed-step RK4 on the full 3x3 master equation, written out
/// element by element from the Hamiltonian and damping definitions. The
/// cumulative emission and spontaneous-loss probabilities are integrated as
/// extra components. Runs over [t0, t1] with the last step shortened.
inline OracleResult rk4_master_equation(double g0, const PhysicalParams& p, double t0, double t1,
                                        double dt) {
  using cd = std::complex<double>;
  using Rho = std::array<std::array<cd, 3>, 3>;
  struct State {
    Rho rho{};
    double emit = 0.0;
    double spont = 0.0;
  };
  const cd i(0.0, 1.0);
  const auto rhs = [&](const State& s, double t) {
    const double xp = (p.v * t + p.delta_x) / p.w_p;
    const double xc = p.v * t / p.w_c;
    const double om = p.omega0_peak * std::exp(-xp * xp);
    const double g = g0 * std::exp(-xc * xc);
    double h[3][3] = {{0.0, -0.5 * om, 0.0}, {-0.5 * om, p.delta, -g}, {0.0, -g, 0.0}};
    const double damp[3] = {0.0, 0.5 * p.gamma, p.kappa};
    State d;
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        cd comm = 0.0;
        for (int k = 0; k < 3; ++k) comm += h[a][k] * s.rho[k][b] - s.rho[a][k] * h[k][b];
        d.rho[a][b] = -i * comm - (damp[a] + damp[b]) * s.rho[a][b];
      }
    }
    d.emit = 2.0 * p.kappa * s.rho[2][2].real();
    d.spont = p.gamma * s.rho[1][1].real();
    return d;
  };
  const auto axpy = [](const State& x, double a, const State& y) {
    State r;
    for (int m = 0; m < 3; ++m)
      for (int n = 0; n < 3; ++n) r.rho[m][n] = x.rho[m][n] + a * y.rho[m][n];
    r.emit = x.emit + a * y.emit;
    r.spont = x.spont + a * y.spont;
    return r;
  };

  State s;
  s.rho[0][0] = 1.0;
  double t = t0;
  while (t < t1) {
    const double h = std::min(dt, t1 - t);
    const State k1 = rhs(s, t);
    const State k2 = rhs(axpy(s, 0.5 * h, k1), t + 0.5 * h);
    const State k3 = rhs(axpy(s, 0.5 * h, k2), t + 0.5 * h);
    const State k4 = rhs(axpy(s, h, k3), t + h);
    s = axpy(s, h / 6.0, k1);
    s = axpy(s, h / 3.0, k2);
    s = axpy(s, h / 3.0, k3);
    s = axpy(s, h / 6.0, k4);
    t += h;
  }
  return {s.rho, s.emit, s.spont};
}

}  // namespace vstirap::testing

namespace vstirap::testing {

/// theta(t + h) - theta(t - h) for positive couplings, evaluated without the
/// cancellation of subtracting two angles near pi/2. Uses tan(theta) =
/// r exp(f(t)) with f(t) = (v t / w_c)^2 - ((v t + dx) / w_p)^2, whose
/// difference across the stencil is exact, and
/// atan(a) - atan(b) = atan2(a - b, 1 + a b) in log-scaled form.
inline double theta_central_difference(double t, double h, double g0, const PhysicalParams& p) {
  const auto f = [&](double s) {
    const double xc = p.v * s / p.w_c;
    const double xp = (p.v * s + p.delta_x) / p.w_p;
    return xc * xc - xp * xp;
  };
  const double log_r = std::log(p.omega0_peak / (2.0 * g0));
  const double log_hi = log_r + f(t + h);
  const double log_lo = log_r + f(t - h);
  const double d = 4.0 * p.v * h * (p.v * t / (p.w_c * p.w_c) - (p.v * t + p.delta_x) / (p.w_p * p.w_p));
  if (log_hi + log_lo > 0.0) {
    // divide numerator and denominator by tan_hi * tan_lo
    return std::atan2(std::expm1(d) * std::exp(-log_hi), std::exp(-(log_hi + log_lo)) + 1.0);
  }
  return std::atan2(std::exp(log_lo) * std::expm1(d), 1.0 + std::exp(log_hi + log_lo));
}

}  // namespace vstirap::testing
