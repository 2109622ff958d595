#pragma once

// Dissipative dynamics of one atom crossing the cavity and pump beam.
//
// Losses are modelled as decay out of the three-state manifold: the photon
// leaves through the cavity mirror at rate 2*kappa*rho_{g1,g1} and the excited
// state decays at rate gamma*rho_{e0,e0}. The trace of rho is therefore the
// population still inside the coupled system.

#include <Eigen/Core>
#include <cstddef>
#include <vector>

#include "vstirap/model.hpp"

namespace vstirap {

using Matrix3c = Eigen::Matrix3cd;

/// 3x3 density matrix on (|u,0>, |e,0>, |g,1>); trace <= 1.
using DensityMatrix = Matrix3c;

enum BasisState : int { kU0 = 0, kE0 = 1, kG1 = 2 };

struct IntegratorOptions {
  double rtol = 1e-9;
  double atol = 1e-12;
  std::size_t samples = 2001;  ///< uniform record samples over the window (>= 2)
  double initial_step = 1e-3;  ///< us
  double min_step = 1e-10;     ///< us; smaller accepted steps count as underflow
};

struct TrajectoryRecord {
  std::vector<double> times;
  std::vector<DensityMatrix> rho;
  std::vector<double> r_emit;              ///< 2 kappa rho_{g1,g1}, 1/us
  std::vector<double> p_emit_cumulative;
  std::vector<double> p_spont_cumulative;
  std::vector<double> theta;

  std::size_t size() const { return times.size(); }
  double trace(std::size_t i) const { return rho[i].trace().real(); }
};

/// Final bookkeeping of one transit.
struct EmissionOutcome {
  double p_emit = 0.0;
  double p_spont = 0.0;
  double final_trace = 1.0;
};

/// H/hbar = 1/2 [[0, -Omega_P, 0], [-Omega_P, 2 Delta, -2g], [0, -2g, 0]].
Matrix3c hamiltonian(double g, double omega_p, double delta);

/// d(rho)/dt = -i[H(t), rho] - {kappa P_g1 + (gamma/2) P_e0, rho}.
Matrix3c liouvillian_rhs(const DensityMatrix& rho, double t, double g0, const PhysicalParams& p);

/// Integrates the master equation from |u,0><u,0| at the start of
/// integration_window(p) to its end, sampling uniformly. The emitted and
/// spontaneously lost probabilities are integrated inside the same ODE solve.
/// Throws IntegrationError on step-size underflow.
TrajectoryRecord evolve(double g0, const PhysicalParams& p, const IntegratorOptions& opts = {});

/// Same transit as evolve() without the record. The initial state is pure and
/// the decay carries population out of the manifold, so rho stays rank one and
/// the solve runs on the three amplitudes under the non-Hermitian
/// H - i (kappa P_g1 + gamma/2 P_e0). Used by the ensemble average.
EmissionOutcome emission_outcome(double g0, const PhysicalParams& p,
                                 const IntegratorOptions& opts = {});

/// Final cumulative emission probability of a record, clamped to [0, 1].
double emission_probability(const TrajectoryRecord& rec);

/// <phi0| rho |phi0> with phi0 = cos(theta)|u,0> - sin(theta)|g,1>.
double dark_state_population(const DensityMatrix& rho, double theta);

}  // namespace vstirap
