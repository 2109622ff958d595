#pragma once

#include <string>
#include <vector>

#include "vstirap/config.hpp"

namespace vstirap {

/// eigen, adiabaticity-map, trajectory, ensemble, sweep, ridge.
const std::vector<std::string>& subcommands();

struct SubcommandResult {
  std::string summary;      ///< one line of key scalar results
  std::string output_path;  ///< artifact written
};

/// Runs one subcommand and writes its artifact to cfg.out, or to
/// "vstirap-<name>.<format>" when cfg.out is empty. Module errors propagate as
/// exceptions derived from vstirap::Error or std::exception.
SubcommandResult run_subcommand(const std::string& name, const RunConfig& cfg, unsigned workers);

/// Entry point of the command-line tool. Prints the summary line on success;
/// on failure prints "error: <kind>: <message>" to stderr and returns nonzero.
int run_cli(int argc, char** argv);

}  // namespace vstirap
