#include "vstirap/ensemble.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "vstirap/parallel.hpp"
#include "vstirap/quadrature.hpp"

namespace vstirap {

namespace {

std::string describe(const IntegrationError& cause, const ImpactPoint& where) {
  return std::string(cause.what()) + " at impact point (y = " + std::to_string(where.y) +
         " um, z = " + std::to_string(where.z) + " um)";
}

}  // namespace

ImpactIntegrationError::ImpactIntegrationError(const IntegrationError& cause, ImpactPoint where)
    : IntegrationError(describe(cause, where), cause.last_good_time()), where_(where) {}

QuadratureGrid impact_grid(const PhysicalParams& p, std::size_t n_y, std::size_t n_z) {
  if (n_y < 1 || n_z < 1) throw std::invalid_argument("impact_grid: n_y and n_z must be >= 1");
  const GaussLegendreRule ry = gauss_legendre(n_y);
  const GaussLegendreRule rz = gauss_legendre(n_z);
  const double quarter = 0.25 * p.lambda;

  QuadratureGrid grid{n_y, n_z, {}};
  grid.nodes.reserve(n_y * n_z);
  for (std::size_t iy = 0; iy < n_y; ++iy) {
    for (std::size_t iz = 0; iz < n_z; ++iz) {
      const ImpactPoint pt{0.5 * p.s_y * ry.nodes[iy], 0.5 * quarter * (rz.nodes[iz] + 1.0)};
      // Each rule's weights sum to 2 on [-1, 1].
      grid.nodes.push_back({pt, 0.25 * ry.weights[iy] * rz.weights[iz]});
    }
  }
  return grid;
}

double averaged_emission(const PhysicalParams& p, const QuadratureGrid& grid,
                         const IntegratorOptions& opts, unsigned workers) {
  if (grid.nodes.empty()) throw std::invalid_argument("averaged_emission: empty grid");

  // Distinct couplings in first-seen order; slot[i] maps node i to its transit.
  std::map<double, std::size_t> seen;
  std::vector<double> couplings;
  std::vector<std::size_t> first_node;
  std::vector<std::size_t> slot(grid.nodes.size());
  for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
    const double g0 = std::abs(coupling_at_impact(grid.nodes[i].point, p));
    auto [it, inserted] = seen.try_emplace(g0, couplings.size());
    if (inserted) {
      couplings.push_back(g0);
      first_node.push_back(i);
    }
    slot[i] = it->second;
  }

  std::vector<double> p_emit(couplings.size());
  parallel_for(couplings.size(), workers, [&](std::size_t k) {
    try {
      p_emit[k] = emission_outcome(couplings[k], p, opts).p_emit;
    } catch (const IntegrationError& e) {
      throw ImpactIntegrationError(e, grid.nodes[first_node[k]].point);
    }
  });

  double sum = 0.0;
  for (std::size_t i = 0; i < grid.nodes.size(); ++i) sum += grid.nodes[i].weight * p_emit[slot[i]];
  return sum;
}

}  // namespace vstirap
