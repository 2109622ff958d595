#include "vstirap/output.hpp"

#include <charconv>
#include <cmath>
#include <json.hpp>
#include <sstream>

namespace vstirap {

namespace {

double to_mhz(double angular) { return angular / kTwoPi; }

template <class... T>
void row(std::ostream& os, const T&... cells) {
  bool first = true;
  ((os << (first ? "" : ",") << format_number(cells), first = false), ...);
  os << '\n';
}

nlohmann::ordered_json config_json(const RunConfig& cfg) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  std::istringstream lines(serialize(cfg));
  for (std::string line; std::getline(lines, line);) {
    const auto eq = line.find(" = ");
    j[line.substr(0, eq)] = line.substr(eq + 3);
  }
  return j;
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void write_provenance(std::ostream& os, const RunConfig& cfg, const std::string& subcommand) {
  os << "# vstirap " << kVersion << '\n';
  os << "# subcommand: " << subcommand << '\n';
  os << "# units: frequencies MHz (linear), lengths um, times us, v m/s, rates 1/us\n";
  std::istringstream lines(serialize(cfg));
  for (std::string line; std::getline(lines, line);) os << "# " << line << '\n';
}

void write_eigen_csv(std::ostream& os, const RunConfig& cfg, const EigenSystem& es) {
  write_provenance(os, cfg, "eigen");
  os << "g,omega_p,delta,omega_zero,omega_plus,omega_minus,theta,phi,"
        "phi0_u0,phi0_e0,phi0_g1,phip_u0,phip_e0,phip_g1,phim_u0,phim_e0,phim_g1\n";
  const DressedStates& s = es.states;
  row(os, cfg.g0_max, cfg.omega0_peak, cfg.delta, to_mhz(es.omega.zero), to_mhz(es.omega.plus),
      to_mhz(es.omega.minus), es.angles.theta, es.angles.phi, s.dark(0).real(), s.dark(1).real(),
      s.dark(2).real(), s.plus(0).real(), s.plus(1).real(), s.plus(2).real(), s.minus(0).real(),
      s.minus(1).real(), s.minus(2).real());
}

void write_trajectory_csv(std::ostream& os, const RunConfig& cfg, const TrajectoryRecord& rec) {
  write_provenance(os, cfg, "trajectory");
  os << "t,rho_uu,rho_ee,rho_gg1,trace,theta,r_emit,p_emit_cum,p_spont_cum\n";
  for (std::size_t i = 0; i < rec.size(); ++i) {
    const DensityMatrix& r = rec.rho[i];
    row(os, rec.times[i], r(kU0, kU0).real(), r(kE0, kE0).real(), r(kG1, kG1).real(), rec.trace(i),
        rec.theta[i], rec.r_emit[i], rec.p_emit_cumulative[i], rec.p_spont_cumulative[i]);
  }
}

void write_map_csv(std::ostream& os, const RunConfig& cfg, const AdiabaticityMap& map) {
  write_provenance(os, cfg, "adiabaticity-map");
  os << "# ratio = min over +/- of |omega0 - omega+-| / |dtheta/dt|, capped at "
     << format_number(kRatioCap) << '\n';
  os << "delta_x,t,ratio\n";
  for (std::size_t r = 0; r < map.displacements.size(); ++r) {
    for (std::size_t c = 0; c < map.times.size(); ++c) {
      row(os, map.displacements[r], map.times[c], map.at(r, c));
    }
  }
}

void write_ridge_csv(std::ostream& os, const RunConfig& cfg, double t_ridge, double theta_dot,
                     double ratio) {
  write_provenance(os, cfg, "ridge");
  os << "delta_x,t_ridge,theta_dot,ratio\n";
  row(os, cfg.delta_x, t_ridge, theta_dot, ratio);
}

void write_ensemble_csv(std::ostream& os, const RunConfig& cfg, double pbar) {
  write_provenance(os, cfg, "ensemble");
  os << "delta_x,omega0,n_y,n_z,pbar\n";
  row(os, cfg.delta_x, cfg.omega0_peak, double(cfg.n_y), double(cfg.n_z), pbar);
}

void write_sweep_csv(std::ostream& os, const RunConfig& cfg, const SweepTable& table) {
  write_provenance(os, cfg, "sweep");
  os << "delta_x,omega0,pbar\n";
  for (std::size_t i = 0; i < table.rows(); ++i) {
    for (std::size_t j = 0; j < table.cols(); ++j) {
      row(os, table.dx_values[i], to_mhz(table.omega0_values[j]), table.at(i, j));
    }
  }
}

void write_sweep_json(std::ostream& os, const RunConfig& cfg, const SweepTable& table) {
  nlohmann::ordered_json j;
  j["format"] = "vstirap-sweep";
  j["metadata"] = {
      {"tool", "vstirap"},
      {"version", std::string(kVersion)},
      {"units", {{"delta_x", "um"}, {"omega0", "MHz"}, {"pbar", "probability"}}},
      {"config", config_json(cfg)},
  };
  j["dx_values"] = table.dx_values;
  nlohmann::ordered_json omega = nlohmann::ordered_json::array();
  for (double w : table.omega0_values) omega.push_back(to_mhz(w));
  j["omega0_values"] = omega;
  j["rows"] = table.rows();
  j["cols"] = table.cols();
  nlohmann::ordered_json pbar = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < table.rows(); ++i) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < table.cols(); ++c) {
      const double v = table.at(i, c);
      if (std::isfinite(v)) {
        r.push_back(v);
      } else {
        r.push_back(nullptr);
      }
    }
    pbar.push_back(std::move(r));
  }
  j["pbar"] = std::move(pbar);
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const CellFailure& f : table.failures) {
    failures.push_back({{"row", f.row}, {"col", f.col}, {"message", f.message}});
  }
  j["failures"] = std::move(failures);
  os << j.dump(2) << '\n';
}

}  // namespace vstirap
