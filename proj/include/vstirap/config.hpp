#pragma once

// Run configuration in laboratory units. Documents are "key = value" lines;
// '#' starts a comment. Frequencies are linear MHz (the 2*pi factor is applied
// by physical() only), lengths um, velocity m/s.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "vstirap/dynamics.hpp"
#include "vstirap/model.hpp"
#include "vstirap/sweep.hpp"

namespace vstirap {

inline constexpr std::string_view kVersion = "0.1.0";

struct RunConfig {
  // physics
  double g0_max = 2.5;       // MHz
  double omega0_peak = 2.5;  // MHz
  double delta = 10.0;       // MHz
  double kappa = 1.25;       // MHz
  double gamma = 6.0;        // MHz
  double w_c = 35.0;
  double w_p = 44.0;
  double v = 2.0;            // m/s
  double delta_x = -40.0;
  double lambda = 0.78024;
  double s_y = 100.0;
  double impact_y = 0.0;
  double impact_z = 0.0;

  // integrator
  double rtol = 1e-9;
  double atol = 1e-12;
  std::size_t samples = 2001;

  // ensemble quadrature
  std::size_t n_y = 21;
  std::size_t n_z = 16;

  // axes
  double dx_min = -100.0;
  double dx_max = 100.0;
  std::size_t dx_count = 41;
  std::vector<double> omega0_values = {1.25, 2.5, 5.0, 10.0, 20.0};  // MHz
  double t_min = -100.0;
  double t_max = 100.0;
  std::size_t t_count = 201;

  // output
  std::string out;     ///< empty: subcommand default file name
  std::string format;  ///< "csv", "json" or empty for the subcommand default

  PhysicalParams physical() const;
  IntegratorOptions integrator() const;
  SweepGridOptions sweep_grid() const;
  ImpactPoint impact() const { return {impact_y, impact_z}; }
  std::vector<double> dx_axis() const { return linspace(dx_min, dx_max, dx_count); }
  std::vector<double> t_axis() const { return linspace(t_min, t_max, t_count); }
  /// Pump amplitudes in rad/us.
  std::vector<double> omega0_axis() const;

  bool operator==(const RunConfig&) const = default;
};

/// Parses a document, then applies `overrides` ("key=value", later wins).
/// Omitted keys keep their defaults; when g0_max is given and omega0_values is
/// not, the pump ladder is {0.5, 1, 2, 4, 8} * g0_max. Throws ConfigError
/// naming the key for unknown or duplicate keys, unparsable or non-finite
/// values, and violated constraints.
RunConfig parse_config(std::string_view text, const std::vector<std::string>& overrides = {});

/// Canonical document: every key, fixed order, shortest round-trip numbers.
std::string serialize(const RunConfig& cfg);

/// Every recognised key, in canonical order.
const std::vector<std::string>& config_keys();

}  // namespace vstirap
