#pragma once

// Dressed states of the pump-atom-cavity system in the one-excitation
// manifold {|u,0>, |e,0>, |g,1>}, and the adiabaticity diagnostics built on
// them.

#include <Eigen/Core>
#include <span>
#include <vector>

#include "vstirap/model.hpp"

namespace vstirap {

using Vector3c = Eigen::Vector3cd;

/// Cap returned by adiabaticity_ratio when |dTheta/dt| is below kThetaDotFloor.
inline constexpr double kRatioCap = 1e6;
inline constexpr double kThetaDotFloor = 1e-12;  // rad/us

struct MixingAngles {
  double theta = 0.0;
  double phi = 0.0;
  /// Set when g = Omega_P = 0; theta and phi then hold the conventions 0 and pi/2.
  bool degenerate = false;
};

struct Eigenfrequencies {
  double zero = 0.0;
  double plus = 0.0;
  double minus = 0.0;
};

struct DressedStates {
  Vector3c dark;   ///< phi^0, no |e,0> component
  Vector3c plus;
  Vector3c minus;
};

struct EigenSystem {
  Eigenfrequencies omega;
  MixingAngles angles;
  DressedStates states;
};

/// theta = atan2(Omega_P, 2g) in [0, pi); phi from tan(phi) = R / (sqrt(R^2 + Delta^2) - Delta)
/// with R^2 = 4g^2 + Omega_P^2, in (0, pi/2).
MixingAngles mixing_angles(double g, double omega_p, double delta);

/// omega^0 = 0 and omega^+- = (Delta +- sqrt(4g^2 + Omega_P^2 + Delta^2)) / 2,
/// evaluated without cancellation in the smaller root.
Eigenfrequencies eigenfrequencies(double g, double omega_p, double delta);

DressedStates eigenstates(double theta, double phi);

EigenSystem eigensystem(double g, double omega_p, double delta);

/// Mixing angle at time t for an atom with peak coupling g0.
double theta_at(double t, double g0, const PhysicalParams& p);

/// Analytic dTheta/dt. Throws UndefinedAngleError when both couplings vanish.
double theta_dot(double t, double g0, const PhysicalParams& p);

/// min over the bright branches of |omega^0 - omega^+-| / |dTheta/dt|, with the
/// pump displacement taken from delta_x. Returns kRatioCap when
/// |dTheta/dt| < kThetaDotFloor and clamps larger ratios to kRatioCap. Returns
/// 0 when both couplings vanish (no splitting, no protection).
double adiabaticity_ratio(double t, double delta_x, double g0, const PhysicalParams& p);

/// Ratio map with one row per displacement and one column per time, using
/// g0 = p.g0_max. Rows are evaluated in parallel on up to `workers` threads.
struct AdiabaticityMap {
  std::vector<double> times;
  std::vector<double> displacements;
  std::vector<double> ratio;  ///< row-major, rows = displacements

  double at(std::size_t row, std::size_t col) const { return ratio[row * times.size() + col]; }
};

AdiabaticityMap adiabaticity_map(std::span<const double> t_grid, std::span<const double> dx_grid,
                                 const PhysicalParams& p, unsigned workers = 1);

/// Time of the maximum of |dTheta/dt| between the cavity centre (t = 0) and the
/// pump centre (t = -dx/v), or over integration_window when dx = 0. Found by a
/// 512-point scan refined by golden-section search to 1e-3 us. Throws
/// NoRidgeError when dTheta/dt vanishes identically.
double theta_dot_ridge(double dx, double g0, const PhysicalParams& p);

}  // namespace vstirap
