#include "vstirap/config.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <system_error>

#include "vstirap/error.hpp"

namespace vstirap {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(const std::string& key, std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError(key, "expected a number, got '" + std::string(text) + "'");
  }
  if (!std::isfinite(value)) throw ConfigError(key, "value must be finite");
  return value;
}

std::size_t to_count(const std::string& key, std::string_view text) {
  text = trim(text);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError(key, "expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::vector<double> to_list(const std::string& key, std::string_view text) {
  std::vector<double> values;
  text = trim(text);
  if (text.empty()) throw ConfigError(key, "expected a comma-separated list of numbers");
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    values.push_back(to_double(key, text.substr(pos, comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return values;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

struct Field {
  std::string key;
  std::function<void(RunConfig&, const std::string&, std::string_view)> set;
  std::function<std::string(const RunConfig&)> get;
};

template <class T>
Field number(std::string key, T RunConfig::*member) {
  return {std::move(key),
          [member](RunConfig& c, const std::string& k, std::string_view v) {
            if constexpr (std::is_same_v<T, double>) {
              c.*member = to_double(k, v);
            } else {
              c.*member = to_count(k, v);
            }
          },
          [member](const RunConfig& c) {
            if constexpr (std::is_same_v<T, double>) {
              return format_double(c.*member);
            } else {
              return std::to_string(c.*member);
            }
          }};
}

Field text(std::string key, std::string RunConfig::*member) {
  return {std::move(key),
          [member](RunConfig& c, const std::string&, std::string_view v) { c.*member = v; },
          [member](const RunConfig& c) { return c.*member; }};
}

const std::vector<Field>& fields() {
  static const std::vector<Field> table = {
      number("g0_max", &RunConfig::g0_max),
      number("omega0_peak", &RunConfig::omega0_peak),
      number("delta", &RunConfig::delta),
      number("kappa", &RunConfig::kappa),
      number("gamma", &RunConfig::gamma),
      number("w_c", &RunConfig::w_c),
      number("w_p", &RunConfig::w_p),
      number("v", &RunConfig::v),
      number("delta_x", &RunConfig::delta_x),
      number("lambda", &RunConfig::lambda),
      number("s_y", &RunConfig::s_y),
      number("impact_y", &RunConfig::impact_y),
      number("impact_z", &RunConfig::impact_z),
      number("rtol", &RunConfig::rtol),
      number("atol", &RunConfig::atol),
      number("samples", &RunConfig::samples),
      number("n_y", &RunConfig::n_y),
      number("n_z", &RunConfig::n_z),
      number("dx_min", &RunConfig::dx_min),
      number("dx_max", &RunConfig::dx_max),
      number("dx_count", &RunConfig::dx_count),
      {"omega0_values",
       [](RunConfig& c, const std::string& k, std::string_view v) { c.omega0_values = to_list(k, v); },
       [](const RunConfig& c) {
         std::string s;
         for (std::size_t i = 0; i < c.omega0_values.size(); ++i) {
           if (i) s += ',';
           s += format_double(c.omega0_values[i]);
         }
         return s;
       }},
      number("t_min", &RunConfig::t_min),
      number("t_max", &RunConfig::t_max),
      number("t_count", &RunConfig::t_count),
      text("out", &RunConfig::out),
      text("format", &RunConfig::format),
  };
  return table;
}

void require(bool ok, const char* key, const std::string& constraint) {
  if (!ok) throw ConfigError(key, "violates " + constraint);
}

void validate(const RunConfig& c) {
  c.physical().validate();
  require(std::abs(c.impact_y) <= 0.5 * c.s_y, "impact_y", "|impact_y| <= s_y / 2");
  require(c.impact_z >= 0.0 && c.impact_z < c.lambda, "impact_z", "0 <= impact_z < lambda");
  require(c.rtol > 0.0, "rtol", "rtol > 0");
  require(c.atol > 0.0, "atol", "atol > 0");
  require(c.samples >= 2, "samples", "samples >= 2");
  require(c.n_y >= 1, "n_y", "n_y >= 1");
  require(c.n_z >= 1, "n_z", "n_z >= 1");
  require(c.dx_count >= 1, "dx_count", "dx_count >= 1");
  require(c.dx_count == 1 || c.dx_min < c.dx_max, "dx_max", "dx_min < dx_max");
  require(c.t_count >= 1, "t_count", "t_count >= 1");
  require(c.t_count == 1 || c.t_min < c.t_max, "t_max", "t_min < t_max");
  require(!c.omega0_values.empty(), "omega0_values", "at least one value");
  for (double w : c.omega0_values) require(w >= 0.0, "omega0_values", "omega0_values >= 0");
  require(c.format.empty() || c.format == "csv" || c.format == "json", "format",
          "format in {csv, json}");
}

}  // namespace

PhysicalParams RunConfig::physical() const {
  PhysicalParams p;
  p.g0_max = kTwoPi * g0_max;
  p.omega0_peak = kTwoPi * omega0_peak;
  p.delta = kTwoPi * delta;
  p.kappa = kTwoPi * kappa;
  p.gamma = kTwoPi * gamma;
  p.w_c = w_c;
  p.w_p = w_p;
  p.v = v;  // 1 m/s == 1 um/us
  p.delta_x = delta_x;
  p.lambda = lambda;
  p.s_y = s_y;
  return p;
}

IntegratorOptions RunConfig::integrator() const {
  IntegratorOptions o;
  o.rtol = rtol;
  o.atol = atol;
  o.samples = samples;
  return o;
}

SweepGridOptions RunConfig::sweep_grid() const { return {n_y, n_z, integrator()}; }

std::vector<double> RunConfig::omega0_axis() const {
  std::vector<double> axis;
  axis.reserve(omega0_values.size());
  for (double mhz : omega0_values) axis.push_back(kTwoPi * mhz);
  return axis;
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const Field& f : fields()) k.push_back(f.key);
    return k;
  }();
  return keys;
}

RunConfig parse_config(std::string_view text, const std::vector<std::string>& overrides) {
  std::map<std::string, std::string> values;
  const auto known = [](const std::string& key) {
    for (const Field& f : fields()) {
      if (f.key == key) return true;
    }
    return false;
  };
  const auto split = [&](std::string_view line, std::string_view sep_name) {
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("", "expected 'key = value' " + std::string(sep_name) + ", got '" +
                                std::string(line) + "'");
    }
    std::string key(trim(line.substr(0, eq)));
    if (!known(key)) throw ConfigError(key, "unknown key");
    return std::pair{key, std::string(trim(line.substr(eq + 1)))};
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto [key, value] = split(line, "line");
    if (!values.emplace(key, value).second) throw ConfigError(key, "duplicate key");
  }
  for (const std::string& o : overrides) {
    auto [key, value] = split(trim(o), "override");
    values[key] = value;
  }

  RunConfig cfg;
  for (const Field& f : fields()) {
    if (auto it = values.find(f.key); it != values.end()) f.set(cfg, f.key, it->second);
  }
  if (values.contains("g0_max") && !values.contains("omega0_values")) {
    cfg.omega0_values.clear();
    for (double r : {0.5, 1.0, 2.0, 4.0, 8.0}) cfg.omega0_values.push_back(r * cfg.g0_max);
  }
  validate(cfg);
  return cfg;
}

std::string serialize(const RunConfig& cfg) {
  std::ostringstream os;
  for (const Field& f : fields()) os << f.key << " = " << f.get(cfg) << '\n';
  return os.str();
}

}  // namespace vstirap
