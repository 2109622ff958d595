#include "vstirap/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vstirap/error.hpp"

namespace vstirap {

namespace {

void require(bool ok, const char* key, const char* constraint) {
  if (!ok) throw ConfigError(key, std::string("violates ") + constraint);
}

}  // namespace

void PhysicalParams::validate() const {
  const auto finite = [](double x) { return std::isfinite(x); };
  require(finite(g0_max) && g0_max > 0.0, "g0_max", "g0_max > 0");
  require(finite(omega0_peak) && omega0_peak >= 0.0, "omega0_peak", "omega0_peak >= 0");
  require(finite(delta), "delta", "finite delta");
  require(finite(kappa) && kappa >= 0.0, "kappa", "kappa >= 0");
  require(finite(gamma) && gamma >= 0.0, "gamma", "gamma >= 0");
  require(finite(w_c) && w_c > 0.0, "w_c", "w_c > 0");
  require(finite(w_p) && w_p > 0.0, "w_p", "w_p > 0");
  require(finite(v) && v > 0.0, "v", "v > 0");
  require(finite(delta_x), "delta_x", "finite delta_x");
  require(finite(lambda) && lambda > 0.0, "lambda", "lambda > 0");
  require(finite(s_y) && s_y >= 0.0, "s_y", "s_y >= 0");
}

double pump_rabi(double t, const PhysicalParams& p) {
  const double x = (p.v * t + p.delta_x) / p.w_p;
  return p.omega0_peak * std::exp(-x * x);
}

double cavity_rabi(double t, double g0, const PhysicalParams& p) {
  const double x = p.v * t / p.w_c;
  return 2.0 * g0 * std::exp(-x * x);
}

double coupling_at_impact(const ImpactPoint& pt, const PhysicalParams& p) {
  const double r = pt.y / p.w_c;
  return p.g0_max * std::cos(kTwoPi * pt.z / p.lambda) * std::exp(-r * r);
}

PulseDerivatives pulse_derivatives(double t, double g0, const PhysicalParams& p) {
  const double pump_arg = p.v * t + p.delta_x;
  return {
      .pump = pump_rabi(t, p) * (-2.0 * p.v * pump_arg / (p.w_p * p.w_p)),
      .cavity = cavity_rabi(t, g0, p) * (-2.0 * p.v * p.v * t / (p.w_c * p.w_c)),
  };
}

TimeWindow integration_window(const PhysicalParams& p) {
  const double pad = 4.0 * std::max(p.w_c, p.w_p) / p.v;
  const double tp = pump_center_time(p);
  return {std::min(0.0, tp) - pad, std::max(0.0, tp) + pad};
}

}  // namespace vstirap
