#include "vstirap/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "vstirap/dressed_states.hpp"
#include "vstirap/dynamics.hpp"
#include "vstirap/ensemble.hpp"
#include "vstirap/error.hpp"
#include "vstirap/output.hpp"
#include "vstirap/parallel.hpp"
#include "vstirap/sweep.hpp"

namespace vstirap {

namespace {

std::string fmt(double v) { return format_number(v); }

std::string resolve_format(const std::string& name, const RunConfig& cfg,
                           std::initializer_list<const char*> allowed) {
  const std::string format = cfg.format.empty() ? *allowed.begin() : cfg.format;
  for (const char* a : allowed) {
    if (format == a) return format;
  }
  throw ConfigError("format", "'" + format + "' is not available for " + name);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("io", "cannot open output file '" + path + "'");
  return os;
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {"eigen",    "adiabaticity-map", "trajectory",
                                                 "ensemble", "sweep",            "ridge"};
  return names;
}

SubcommandResult run_subcommand(const std::string& name, const RunConfig& cfg, unsigned workers) {
  const PhysicalParams p = cfg.physical();
  const auto path_for = [&](const std::string& format) {
    return cfg.out.empty() ? "vstirap-" + name + "." + format : cfg.out;
  };
  std::ostringstream summary;
  summary << name << ":";
  std::string path;

  if (name == "eigen") {
    const std::string format = resolve_format(name, cfg, {"csv"});
    const EigenSystem es = eigensystem(p.g0_max, p.omega0_peak, p.delta);
    path = path_for(format);
    auto os = open_output(path);
    write_eigen_csv(os, cfg, es);
    summary << " omega0/2pi=" << fmt(es.omega.zero / kTwoPi) << " MHz"
            << " omega+/2pi=" << fmt(es.omega.plus / kTwoPi) << " MHz"
            << " omega-/2pi=" << fmt(es.omega.minus / kTwoPi) << " MHz"
            << " theta=" << fmt(es.angles.theta) << " phi=" << fmt(es.angles.phi)
            << (es.angles.degenerate ? " (degenerate)" : "");
  } else if (name == "adiabaticity-map") {
    const std::string format = resolve_format(name, cfg, {"csv"});
    const std::vector<double> t = cfg.t_axis();
    const std::vector<double> dx = cfg.dx_axis();
    const AdiabaticityMap map = adiabaticity_map(t, dx, p, workers);
    path = path_for(format);
    auto os = open_output(path);
    write_map_csv(os, cfg, map);
    double lo = kRatioCap;
    for (double r : map.ratio) lo = std::min(lo, r);
    summary << " rows=" << dx.size() << " cols=" << t.size() << " min_ratio=" << fmt(lo);
  } else if (name == "trajectory") {
    const std::string format = resolve_format(name, cfg, {"csv"});
    const double g0 = coupling_at_impact(cfg.impact(), p);
    const TrajectoryRecord rec = evolve(g0, p, cfg.integrator());
    path = path_for(format);
    auto os = open_output(path);
    write_trajectory_csv(os, cfg, rec);
    summary << " g0/2pi=" << fmt(g0 / kTwoPi) << " MHz"
            << " p_emit=" << fmt(emission_probability(rec))
            << " p_spont=" << fmt(rec.p_spont_cumulative.back())
            << " trace_end=" << fmt(rec.trace(rec.size() - 1));
  } else if (name == "ensemble") {
    const std::string format = resolve_format(name, cfg, {"csv"});
    const QuadratureGrid grid = impact_grid(p, cfg.n_y, cfg.n_z);
    const double pbar = averaged_emission(p, grid, cfg.integrator(), workers);
    path = path_for(format);
    auto os = open_output(path);
    write_ensemble_csv(os, cfg, pbar);
    summary << " pbar=" << fmt(pbar) << " n_y=" << cfg.n_y << " n_z=" << cfg.n_z;
  } else if (name == "sweep") {
    const std::string format = resolve_format(name, cfg, {"json", "csv"});
    const SweepTable table =
        sweep(p, cfg.dx_axis(), cfg.omega0_axis(), cfg.sweep_grid(), workers);
    path = path_for(format);
    auto os = open_output(path);
    if (format == "json") {
      write_sweep_json(os, cfg, table);
    } else {
      write_sweep_csv(os, cfg, table);
    }
    summary << " cells=" << table.pbar.size() << " failures=" << table.failures.size();
    for (std::size_t j = 0; j < table.cols(); ++j) {
      summary << " | omega0/2pi=" << fmt(cfg.omega0_values[j]) << " MHz";
      try {
        const Optimum opt = find_optimum(table, j);
        summary << " dx*=" << fmt(opt.dx) << " pbar*=" << fmt(opt.pbar);
      } catch (const std::invalid_argument&) {
        summary << " dx*=n/a";
      }
    }
  } else if (name == "ridge") {
    const std::string format = resolve_format(name, cfg, {"csv"});
    const double t_ridge = theta_dot_ridge(p.delta_x, p.g0_max, p);
    const double rate = theta_dot(t_ridge, p.g0_max, p);
    const double ratio = adiabaticity_ratio(t_ridge, p.delta_x, p.g0_max, p);
    path = path_for(format);
    auto os = open_output(path);
    write_ridge_csv(os, cfg, t_ridge, rate, ratio);
    summary << " t_ridge=" << fmt(t_ridge) << " us theta_dot=" << fmt(rate)
            << " rad/us ratio=" << fmt(ratio);
  } else {
    throw ConfigError("subcommand", "unknown subcommand '" + name + "'");
  }
  return {summary.str(), path};
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Vacuum-stimulated Raman adiabatic passage simulator"};
  app.set_version_flag("--version", std::string(kVersion));
  std::string name;
  std::string config_path;
  std::vector<std::string> overrides;
  std::string out;
  std::string format;
  app.add_option("subcommand", name, "eigen | adiabaticity-map | trajectory | ensemble | sweep | ridge")
      ->required()
      ->check(CLI::IsMember(subcommands()));
  app.add_option("--config", config_path, "key = value configuration file")
      ->check(CLI::ExistingFile);
  app.add_option("--set", overrides,
                 "override key=value; applied after --config, later overrides win");
  app.add_option("--out", out, "output path (default vstirap-<subcommand>.<format>)");
  app.add_option("--format", format, "csv | json (json only for sweep)")
      ->check(CLI::IsMember({"csv", "json"}));
  app.footer(
      "Precedence: defaults < --config file < --set overrides < --out/--format.\n"
      "Frequencies are linear MHz, lengths um, velocity m/s.\n"
      "VSTIRAP_WORKERS sets the worker thread count (default: hardware concurrency).");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    std::string text;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      std::ostringstream buf;
      buf << in.rdbuf();
      text = buf.str();
    }
    if (!out.empty()) overrides.push_back("out=" + out);
    if (!format.empty()) overrides.push_back("format=" + format);
    const RunConfig cfg = parse_config(text, overrides);
    const SubcommandResult result = run_subcommand(name, cfg, default_workers());
    std::cout << result.summary << '\n';
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: runtime: " << e.what() << '\n';
  }
  return 1;
}

}  // namespace vstirap
