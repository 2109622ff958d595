#pragma once

// Average of the single-atom emission probability over the random point where
// each atom crosses the cavity mode: uniform over the slit aperture in y and
// over one standing-wave period in z.

#include <cstddef>
#include <vector>

#include "vstirap/dynamics.hpp"
#include "vstirap/error.hpp"
#include "vstirap/model.hpp"

namespace vstirap {

struct QuadratureNode {
  ImpactPoint point;
  double weight = 0.0;
};

struct QuadratureGrid {
  std::size_t n_y = 0;
  std::size_t n_z = 0;
  std::vector<QuadratureNode> nodes;  ///< y-major: index = iy * n_z + iz
};

/// Tensor Gauss-Legendre grid: n_y nodes over [-s_y/2, s_y/2] and n_z nodes
/// over the quarter period [0, lambda/4]. P_emit depends on |g0| only, and
/// |cos| over a full period averages like cos over a quarter, so the quarter
/// grid reproduces the full-period mean. Weights are normalised to 1.
QuadratureGrid impact_grid(const PhysicalParams& p, std::size_t n_y, std::size_t n_z);

/// Thrown when the transit of one impact point fails to integrate.
class ImpactIntegrationError : public IntegrationError {
 public:
  ImpactIntegrationError(const IntegrationError& cause, ImpactPoint where);
  const ImpactPoint& where() const noexcept { return where_; }

 private:
  ImpactPoint where_;
};

/// Weighted sum of P_emit(coupling_at_impact(node)) over the grid. Nodes with
/// bitwise-equal coupling (mirror images in y) are integrated once. Transits
/// run on up to `workers` threads; the reduction is in grid order so the result
/// does not depend on the worker count.
double averaged_emission(const PhysicalParams& p, const QuadratureGrid& grid,
                         const IntegratorOptions& opts = {}, unsigned workers = 1);

}  // namespace vstirap
