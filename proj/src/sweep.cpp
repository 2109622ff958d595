#include "vstirap/sweep.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "vstirap/ensemble.hpp"
#include "vstirap/error.hpp"
#include "vstirap/parallel.hpp"

namespace vstirap {

SweepTable sweep(const PhysicalParams& base, const std::vector<double>& dx_values,
                 const std::vector<double>& omega0_values, const SweepGridOptions& grid,
                 unsigned workers) {
  if (dx_values.empty() || omega0_values.empty()) {
    throw std::invalid_argument("sweep: axes must be nonempty");
  }
  for (double v : dx_values) {
    if (!std::isfinite(v)) throw std::invalid_argument("sweep: non-finite displacement");
  }
  for (double v : omega0_values) {
    if (!std::isfinite(v) || v < 0.0) throw std::invalid_argument("sweep: invalid pump amplitude");
  }

  SweepTable table;
  table.base = base;
  table.grid = grid;
  table.dx_values = dx_values;
  table.omega0_values = omega0_values;
  const std::size_t cols = omega0_values.size();
  const std::size_t cells = dx_values.size() * cols;
  table.pbar.assign(cells, std::numeric_limits<double>::quiet_NaN());
  std::vector<std::string> errors(cells);

  const QuadratureGrid nodes = impact_grid(base, grid.n_y, grid.n_z);
  parallel_for(cells, workers, [&](std::size_t cell) {
    PhysicalParams p = base.with_delta_x(dx_values[cell / cols]);
    p.omega0_peak = omega0_values[cell % cols];
    try {
      table.pbar[cell] = averaged_emission(p, nodes, grid.integrator, 1);
    } catch (const IntegrationError& e) {
      errors[cell] = e.what();
    }
  });

  for (std::size_t cell = 0; cell < cells; ++cell) {
    if (!errors[cell].empty()) table.failures.push_back({cell / cols, cell % cols, errors[cell]});
  }
  return table;
}

Optimum find_optimum(const SweepTable& table, std::size_t omega0_index) {
  if (omega0_index >= table.cols()) throw std::out_of_range("find_optimum: column out of range");
  const std::size_t n = table.rows();
  std::size_t finite = 0;
  std::size_t best = n;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = table.at(i, omega0_index);
    if (!std::isfinite(v)) continue;
    ++finite;
    if (best == n) {
      best = i;
      continue;
    }
    const double b = table.at(best, omega0_index);
    if (v > b || (v == b && table.dx_values[i] < table.dx_values[best])) best = i;
  }
  if (finite < 3) throw std::invalid_argument("find_optimum: fewer than three finite entries");

  Optimum opt{table.dx_values[best], table.at(best, omega0_index)};
  if (best == 0 || best + 1 == n) return opt;
  const double x0 = table.dx_values[best - 1], x1 = table.dx_values[best],
               x2 = table.dx_values[best + 1];
  const double y0 = table.at(best - 1, omega0_index), y1 = opt.pbar,
               y2 = table.at(best + 1, omega0_index);
  if (!std::isfinite(y0) || !std::isfinite(y2)) return opt;

  // Parabola through the three points in Newton form.
  const double d01 = (y1 - y0) / (x1 - x0);
  const double d12 = (y2 - y1) / (x2 - x1);
  const double curvature = (d12 - d01) / (x2 - x0);
  if (!(curvature < 0.0)) return opt;
  const double vertex = 0.5 * (x0 + x1) - d01 / (2.0 * curvature);
  opt.dx = vertex;
  opt.pbar = y0 + d01 * (vertex - x0) + curvature * (vertex - x0) * (vertex - x1);
  return opt;
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  if (count == 0) return {};
  if (count == 1) return {lo};
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) {
    v[i] = lo + (hi - lo) * double(i) / double(count - 1);
  }
  v.back() = hi;
  return v;
}

}  // namespace vstirap
