#pragma once

// Plot-ready exports. CSV files start with '#' provenance lines (tool version,
// subcommand and the canonical configuration), followed by one header row and
// comma-separated data with '.' decimals. Sweep tables are also available as
// a JSON document carrying the same provenance under "metadata".

#include <ostream>
#include <string>

#include "vstirap/config.hpp"
#include "vstirap/dressed_states.hpp"
#include "vstirap/dynamics.hpp"
#include "vstirap/sweep.hpp"

namespace vstirap {

void write_provenance(std::ostream& os, const RunConfig& cfg, const std::string& subcommand);

void write_eigen_csv(std::ostream& os, const RunConfig& cfg, const EigenSystem& es);
void write_trajectory_csv(std::ostream& os, const RunConfig& cfg, const TrajectoryRecord& rec);
void write_map_csv(std::ostream& os, const RunConfig& cfg, const AdiabaticityMap& map);
void write_ridge_csv(std::ostream& os, const RunConfig& cfg, double t_ridge, double theta_dot,
                     double ratio);
void write_ensemble_csv(std::ostream& os, const RunConfig& cfg, double pbar);
void write_sweep_csv(std::ostream& os, const RunConfig& cfg, const SweepTable& table);
void write_sweep_json(std::ostream& os, const RunConfig& cfg, const SweepTable& table);

/// Shortest decimal string that round-trips to the same double; "nan" for NaN.
std::string format_number(double v);

}  // namespace vstirap
