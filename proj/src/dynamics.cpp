#include "vstirap/dynamics.hpp"

#include <algorithm>
#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <complex>
#include <sstream>

#include "vstirap/dressed_states.hpp"
#include "vstirap/error.hpp"

namespace vstirap {

namespace odeint = boost::numeric::odeint;

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

// Hermitian rho packed as three real diagonal entries followed by the real and
// imaginary parts of the upper triangle, then the two cumulative probabilities.
using RhoState = std::array<double, 11>;
constexpr int kEmitSlot = 9;
constexpr int kSpontSlot = 10;

// Amplitudes of |u,0>, |e,0>, |g,1> as (re, im) pairs, then the cumulatives.
using AmplitudeState = std::array<double, 8>;

DensityMatrix unpack(const RhoState& x) {
  DensityMatrix rho;
  rho(0, 0) = x[0];
  rho(1, 1) = x[1];
  rho(2, 2) = x[2];
  rho(0, 1) = cd(x[3], x[4]);
  rho(0, 2) = cd(x[5], x[6]);
  rho(1, 2) = cd(x[7], x[8]);
  rho(1, 0) = std::conj(rho(0, 1));
  rho(2, 0) = std::conj(rho(0, 2));
  rho(2, 1) = std::conj(rho(1, 2));
  return rho;
}

void pack(const Matrix3c& m, RhoState& x) {
  x[0] = m(0, 0).real();
  x[1] = m(1, 1).real();
  x[2] = m(2, 2).real();
  x[3] = m(0, 1).real();
  x[4] = m(0, 1).imag();
  x[5] = m(0, 2).real();
  x[6] = m(0, 2).imag();
  x[7] = m(1, 2).real();
  x[8] = m(1, 2).imag();
}

// Drives a controlled stepper from t to target, landing on target exactly.
// dt carries the step-size proposal across calls.
template <class Stepper, class System, class State>
void advance_to(Stepper& stepper, System& sys, State& x, double& t, double target, double& dt,
                const IntegratorOptions& opts) {
  while (t < target) {
    const bool clamped = dt >= target - t;
    double h = clamped ? target - t : dt;
    if (stepper.try_step(sys, x, t, h) == odeint::success) {
      if (clamped) {
        t = target;
        dt = std::max(dt, h);
      } else {
        dt = h;
      }
    } else {
      dt = h;
      if (dt < opts.min_step) {
        std::ostringstream msg;
        msg << "step size underflow (dt = " << dt << " us) after t = " << t << " us";
        throw IntegrationError(msg.str(), t);
      }
    }
  }
}

}  // namespace

Matrix3c hamiltonian(double g, double omega_p, double delta) {
  Matrix3c h = Matrix3c::Zero();
  h(kU0, kE0) = h(kE0, kU0) = -0.5 * omega_p;
  h(kE0, kE0) = delta;
  h(kE0, kG1) = h(kG1, kE0) = -g;
  return h;
}

Matrix3c liouvillian_rhs(const DensityMatrix& rho, double t, double g0, const PhysicalParams& p) {
  const Matrix3c h = hamiltonian(0.5 * cavity_rabi(t, g0, p), pump_rabi(t, p), p.delta);
  Matrix3c drho = -kI * (h * rho - rho * h);
  // Anticommutator with the diagonal damping operator diag(0, gamma/2, kappa).
  const double damp[3] = {0.0, 0.5 * p.gamma, p.kappa};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) drho(i, j) -= (damp[i] + damp[j]) * rho(i, j);
  }
  return drho;
}

TrajectoryRecord evolve(double g0, const PhysicalParams& p, const IntegratorOptions& opts) {
  const TimeWindow win = integration_window(p);
  const std::size_t n = std::max<std::size_t>(opts.samples, 2);

  auto sys = [&](const RhoState& x, RhoState& dxdt, double t) {
    const DensityMatrix rho = unpack(x);
    pack(liouvillian_rhs(rho, t, g0, p), dxdt);
    dxdt[kEmitSlot] = 2.0 * p.kappa * x[kG1];
    dxdt[kSpontSlot] = p.gamma * x[kE0];
  };

  TrajectoryRecord rec;
  rec.times.reserve(n);
  rec.rho.reserve(n);
  rec.r_emit.reserve(n);
  rec.p_emit_cumulative.reserve(n);
  rec.p_spont_cumulative.reserve(n);
  rec.theta.reserve(n);
  const auto record = [&](double t, const RhoState& x) {
    rec.times.push_back(t);
    rec.rho.push_back(unpack(x));
    rec.r_emit.push_back(2.0 * p.kappa * x[kG1]);
    rec.p_emit_cumulative.push_back(x[kEmitSlot]);
    rec.p_spont_cumulative.push_back(x[kSpontSlot]);
    rec.theta.push_back(theta_at(t, g0, p));
  };

  RhoState x{};
  x[kU0] = 1.0;
  double t = win.start;
  double dt = opts.initial_step;
  auto stepper = odeint::make_controlled(opts.atol, opts.rtol, odeint::runge_kutta_dopri5<RhoState>());
  record(t, x);
  for (std::size_t k = 1; k < n; ++k) {
    const double target = k + 1 == n ? win.end : win.start + win.length() * double(k) / double(n - 1);
    advance_to(stepper, sys, x, t, target, dt, opts);
    record(t, x);
  }
  return rec;
}

EmissionOutcome emission_outcome(double g0, const PhysicalParams& p, const IntegratorOptions& opts) {
  const TimeWindow win = integration_window(p);
  const double half_gamma = 0.5 * p.gamma;

  auto sys = [&](const AmplitudeState& x, AmplitudeState& dxdt, double t) {
    const double half_pump = 0.5 * pump_rabi(t, p);
    const double g = 0.5 * cavity_rabi(t, g0, p);
    const cd u(x[0], x[1]), e(x[2], x[3]), c(x[4], x[5]);
    // i d(psi)/dt = (H - i Gamma) psi
    const cd du = kI * (half_pump * e);
    const cd de = kI * (half_pump * u - p.delta * e + g * c) - half_gamma * e;
    const cd dc = kI * (g * e) - p.kappa * c;
    dxdt = {du.real(), du.imag(), de.real(), de.imag(), dc.real(), dc.imag(),
            2.0 * p.kappa * std::norm(c), p.gamma * std::norm(e)};
  };

  AmplitudeState x{1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
  double t = win.start;
  double dt = opts.initial_step;
  auto stepper =
      odeint::make_controlled(opts.atol, opts.rtol, odeint::runge_kutta_dopri5<AmplitudeState>());
  advance_to(stepper, sys, x, t, win.end, dt, opts);

  return {.p_emit = x[6],
          .p_spont = x[7],
          .final_trace = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3] + x[4] * x[4] +
                         x[5] * x[5]};
}

double emission_probability(const TrajectoryRecord& rec) {
  if (rec.p_emit_cumulative.empty()) return 0.0;
  return std::clamp(rec.p_emit_cumulative.back(), 0.0, 1.0);
}

double dark_state_population(const DensityMatrix& rho, double theta) {
  const Eigen::Vector3cd dark(std::cos(theta), 0.0, -std::sin(theta));
  return (dark.adjoint() * rho * dark)(0, 0).real();
}

}  // namespace vstirap
