#pragma once

// Displacement x pump-intensity sweeps of the impact-averaged emission
// probability, and location of the emission optimum along one column.

#include <cstddef>
#include <string>
#include <vector>

#include "vstirap/dynamics.hpp"
#include "vstirap/model.hpp"

namespace vstirap {

struct SweepGridOptions {
  std::size_t n_y = 21;
  std::size_t n_z = 16;
  IntegratorOptions integrator{};
};

struct CellFailure {
  std::size_t row = 0;
  std::size_t col = 0;
  std::string message;
};

struct SweepTable {
  PhysicalParams base;                 ///< delta_x and omega0_peak are overridden per cell
  SweepGridOptions grid;
  std::vector<double> dx_values;       ///< rows, um
  std::vector<double> omega0_values;   ///< columns, rad/us
  std::vector<double> pbar;            ///< row-major; NaN marks a failed cell
  std::vector<CellFailure> failures;   ///< ordered by (row, col)

  std::size_t rows() const { return dx_values.size(); }
  std::size_t cols() const { return omega0_values.size(); }
  double at(std::size_t row, std::size_t col) const { return pbar[row * cols() + col]; }
};

/// pbar(i, j) = averaged_emission with delta_x = dx_values[i] and
/// omega0_peak = omega0_values[j]. Cells run on up to `workers` threads; a cell
/// whose integration fails is stored as NaN with a failure entry and the sweep
/// carries on. The table is identical for any worker count.
SweepTable sweep(const PhysicalParams& base, const std::vector<double>& dx_values,
                 const std::vector<double>& omega0_values, const SweepGridOptions& grid = {},
                 unsigned workers = 1);

struct Optimum {
  double dx = 0.0;
  double pbar = 0.0;
};

/// Discrete argmax of one column refined by the vertex of the parabola through
/// the maximum and its neighbours. Ties go to the more negative displacement. A
/// maximum on the axis boundary is returned unrefined. Throws
/// std::invalid_argument when the column has fewer than three finite entries.
Optimum find_optimum(const SweepTable& table, std::size_t omega0_index);

/// Uniform axis of `count` points from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, std::size_t count);

}  // namespace vstirap
