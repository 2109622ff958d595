#pragma once

// Physical parameters and the space/time dependence of the pump and cavity
// couplings seen by an atom falling through the cavity mode.
//
// Internal units throughout the library: time in microseconds, length in
// micrometres, angular frequencies in rad/us. Velocities are um/us, which is
// numerically identical to m/s.

#include <numbers>
#include <utility>

namespace vstirap {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct PhysicalParams {
  double g0_max = kTwoPi * 2.5;        ///< peak atom-cavity coupling (antinode, on axis)
  double omega0_peak = kTwoPi * 2.5;   ///< peak pump Rabi frequency
  double delta = kTwoPi * 10.0;        ///< common detuning (Raman resonant)
  double kappa = kTwoPi * 1.25;        ///< cavity field decay rate
  double gamma = kTwoPi * 6.0;         ///< excited-state population decay rate
  double w_c = 35.0;                   ///< cavity mode waist
  double w_p = 44.0;                   ///< pump beam waist
  double v = 2.0;                      ///< atomic velocity
  double delta_x = -40.0;              ///< pump displacement; negative = cavity first
  double lambda = 0.78024;             ///< standing-wave wavelength
  double s_y = 100.0;                  ///< slit aperture width

  /// Throws ConfigError naming the first violated constraint.
  void validate() const;

  /// Same parameters with a different pump displacement.
  PhysicalParams with_delta_x(double dx) const {
    PhysicalParams p = *this;
    p.delta_x = dx;
    return p;
  }
};

/// Point where an atom crosses the cavity mode: y is the transverse offset
/// from the mode axis, z the position along the standing wave.
struct ImpactPoint {
  double y = 0.0;
  double z = 0.0;
};

struct PulseDerivatives {
  double pump = 0.0;    ///< d(Omega_P)/dt
  double cavity = 0.0;  ///< d(2g)/dt
};

struct TimeWindow {
  double start = 0.0;
  double end = 0.0;
  double length() const { return end - start; }
};

/// Pump Rabi frequency Omega_0 exp(-((v t + dx)/w_p)^2); peaks at t = -dx/v.
double pump_rabi(double t, const PhysicalParams& p);

/// Cavity Rabi frequency 2 g(t) = 2 g0 exp(-(v t / w_c)^2); peaks at t = 0.
double cavity_rabi(double t, double g0, const PhysicalParams& p);

/// Signed peak coupling g0_max cos(2 pi z / lambda) exp(-(y/w_c)^2).
double coupling_at_impact(const ImpactPoint& pt, const PhysicalParams& p);

/// Closed-form time derivatives of both envelopes.
PulseDerivatives pulse_derivatives(double t, double g0, const PhysicalParams& p);

/// Window holding both pulse centres, padded by four waist transit times on
/// each side so that both envelopes are below e^-16 of their peak outside it.
TimeWindow integration_window(const PhysicalParams& p);

/// Time at which the pump envelope peaks.
inline double pump_center_time(const PhysicalParams& p) { return -p.delta_x / p.v; }

}  // namespace vstirap
