#include "vstirap/dressed_states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "vstirap/error.hpp"
#include "vstirap/parallel.hpp"

namespace vstirap {

MixingAngles mixing_angles(double g, double omega_p, double delta) {
  if (g == 0.0 && omega_p == 0.0) {
    return {.theta = 0.0, .phi = std::numbers::pi / 2, .degenerate = true};
  }
  const double r = std::hypot(2.0 * g, omega_p);
  const double s = std::hypot(r, delta);
  // tan(phi) = r / (s - delta) = (s + delta) / r; pick the form without cancellation.
  const double phi = delta >= 0.0 ? std::atan2(s + delta, r) : std::atan2(r, s - delta);
  return {.theta = std::atan2(omega_p, 2.0 * g), .phi = phi, .degenerate = false};
}

Eigenfrequencies eigenfrequencies(double g, double omega_p, double delta) {
  const double r2 = 4.0 * g * g + omega_p * omega_p;
  const double s = std::sqrt(r2 + delta * delta);
  Eigenfrequencies w;
  if (delta >= 0.0) {
    w.plus = 0.5 * (delta + s);
    w.minus = w.plus > 0.0 ? -0.25 * r2 / w.plus : 0.0;
  } else {
    w.minus = 0.5 * (delta - s);
    w.plus = -0.25 * r2 / w.minus;
  }
  return w;
}

DressedStates eigenstates(double theta, double phi) {
  const double ct = std::cos(theta), st = std::sin(theta);
  const double cp = std::cos(phi), sp = std::sin(phi);
  DressedStates d;
  d.dark = Vector3c(ct, 0.0, -st);
  d.plus = Vector3c(cp * st, -sp, cp * ct);
  d.minus = Vector3c(sp * st, cp, sp * ct);
  return d;
}

EigenSystem eigensystem(double g, double omega_p, double delta) {
  EigenSystem es;
  es.omega = eigenfrequencies(g, omega_p, delta);
  es.angles = mixing_angles(g, omega_p, delta);
  es.states = eigenstates(es.angles.theta, es.angles.phi);
  return es;
}

double theta_at(double t, double g0, const PhysicalParams& p) {
  return std::atan2(pump_rabi(t, p), cavity_rabi(t, g0, p));
}

double theta_dot(double t, double g0, const PhysicalParams& p) {
  const double pump = pump_rabi(t, p);
  const double cav = cavity_rabi(t, g0, p);
  const double norm2 = pump * pump + cav * cav;
  if (norm2 == 0.0) {
    throw UndefinedAngleError("both couplings vanish at t = " + std::to_string(t));
  }
  const PulseDerivatives d = pulse_derivatives(t, g0, p);
  return (d.pump * cav - pump * d.cavity) / norm2;
}

double adiabaticity_ratio(double t, double delta_x, double g0, const PhysicalParams& p) {
  const PhysicalParams q = p.with_delta_x(delta_x);
  const double pump = pump_rabi(t, q);
  const double g = 0.5 * cavity_rabi(t, g0, q);
  if (pump == 0.0 && g == 0.0) return 0.0;
  const double rate = std::abs(theta_dot(t, g0, q));
  if (rate < kThetaDotFloor) return kRatioCap;
  const Eigenfrequencies w = eigenfrequencies(g, pump, q.delta);
  const double gap = std::min(std::abs(w.zero - w.plus), std::abs(w.zero - w.minus));
  return std::min(gap / rate, kRatioCap);
}

AdiabaticityMap adiabaticity_map(std::span<const double> t_grid, std::span<const double> dx_grid,
                                 const PhysicalParams& p, unsigned workers) {
  const auto increasing = [](std::span<const double> v) {
    return !v.empty() && std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
  };
  if (!increasing(t_grid) || !increasing(dx_grid)) {
    throw std::invalid_argument("adiabaticity_map: grids must be nonempty and strictly increasing");
  }
  AdiabaticityMap map;
  map.times.assign(t_grid.begin(), t_grid.end());
  map.displacements.assign(dx_grid.begin(), dx_grid.end());
  map.ratio.resize(t_grid.size() * dx_grid.size());
  parallel_for(dx_grid.size(), workers, [&](std::size_t row) {
    for (std::size_t col = 0; col < t_grid.size(); ++col) {
      map.ratio[row * t_grid.size() + col] =
          adiabaticity_ratio(t_grid[col], dx_grid[row], p.g0_max, p);
    }
  });
  return map;
}

double theta_dot_ridge(double dx, double g0, const PhysicalParams& p) {
  const PhysicalParams q = p.with_delta_x(dx);
  if (dx == 0.0 && p.w_p == p.w_c) {
    throw NoRidgeError("proportional envelopes: dTheta/dt vanishes identically");
  }
  // Between the two pulse centres when they differ: with unequal waists the
  // far wings carry further |dTheta/dt| maxima where both couplings are ~e^-16.
  const double tp = pump_center_time(q);
  const TimeWindow win = dx != 0.0 ? TimeWindow{std::min(0.0, tp), std::max(0.0, tp)}
                                   : integration_window(q);
  const auto rate = [&](double t) {
    const double pump = pump_rabi(t, q);
    const double cav = cavity_rabi(t, g0, q);
    if (pump == 0.0 && cav == 0.0) return 0.0;
    return std::abs(theta_dot(t, g0, q));
  };

  constexpr int kScan = 512;
  const double step = win.length() / (kScan - 1);
  int best = 0;
  double best_rate = -1.0;
  for (int i = 0; i < kScan; ++i) {
    const double r = rate(win.start + i * step);
    if (r > best_rate) {
      best_rate = r;
      best = i;
    }
  }
  if (best_rate < kThetaDotFloor) {
    throw NoRidgeError("dTheta/dt vanishes for delta_x = " + std::to_string(dx));
  }

  // Golden-section maximisation on the bracket around the best scan point.
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = win.start + std::max(best - 1, 0) * step;
  double b = win.start + std::min(best + 1, kScan - 1) * step;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = rate(c), fd = rate(d);
  while (b - a > 1e-4) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = rate(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = rate(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace vstirap
