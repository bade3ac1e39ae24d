#include "lymanfield/config.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

namespace lymanfield {

namespace {
std::string trim(const std::string &s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string &raw) {
  const std::string s = trim(raw);
  double v = 0.0;
  const char *first = s.data(), *last = s.data() + s.size();
  if (!s.empty() && *first == '+')
    ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc() || ptr != last || !std::isfinite(v))
    throw ConfigError("malformed number '" + s + "'");
  return v;
}

int parse_int(const std::string &raw) {
  const std::string s = trim(raw);
  int v = 0;
  const char *first = s.data(), *last = s.data() + s.size();
  if (!s.empty() && *first == '+')
    ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc() || ptr != last)
    throw ConfigError("malformed integer '" + s + "'");
  return v;
}

std::vector<std::string> split_commas(const std::string &s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ','))
    out.push_back(trim(item));
  if (!s.empty() && s.back() == ',')
    out.push_back({});
  return out;
}
} // namespace

const char *to_string(RunMode m) {
  switch (m) {
  case RunMode::Decay:
    return "decay";
  case RunMode::Spectrum:
    return "spectrum";
  case RunMode::Field:
    return "field";
  case RunMode::Asymptotics:
    return "asymptotics";
  case RunMode::Angular:
    return "angular";
  case RunMode::Validate:
    return "validate";
  }
  return "?";
}

const char *to_string(Preset p) { return p == Preset::Hydrogen ? "hydrogen" : "synthetic"; }

std::vector<double> parse_grid(const std::string &text) {
  const std::string s = trim(text);
  for (const char *fn : {"logspace", "linspace"}) {
    const std::string name(fn);
    if (s.rfind(name, 0) != 0)
      continue;
    const auto open = s.find('('), close = s.rfind(')');
    if (open != name.size() || close != s.size() - 1)
      throw ConfigError("malformed grid '" + s + "'");
    const auto args = split_commas(s.substr(open + 1, close - open - 1));
    if (args.size() != 3)
      throw ConfigError(name + " takes (start, stop, count)");
    const double a = parse_number(args[0]), b = parse_number(args[1]);
    const int n = parse_int(args[2]);
    if (n < 1)
      throw ConfigError(name + ": count must be positive");
    const bool log = name == "logspace";
    if (log && (!(a > 0.0) || !(b > 0.0)))
      throw ConfigError("logspace needs positive endpoints");
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) {
      const double f = n == 1 ? 0.0 : double(i) / double(n - 1);
      v[i] = log ? std::exp(std::log(a) + f * (std::log(b) - std::log(a))) : a + f * (b - a);
    }
    // endpoints exactly as written
    v.front() = a;
    if (n > 1)
      v.back() = b;
    return v;
  }
  std::vector<double> v;
  for (const auto &item : split_commas(s))
    v.push_back(parse_number(item));
  if (v.empty())
    throw ConfigError("empty grid");
  return v;
}

RunConfig parse_config(const std::string &text) {
  std::map<std::string, std::pair<std::string, int>> kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    line = trim(line);
    if (line.empty())
      continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("line " + std::to_string(lineno) + ": empty key or value");
    if (kv.count(key))
      throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    kv[key] = {value, lineno};
  }

  RunConfig cfg;
  auto at = [&](const std::string &key) { return "line " + std::to_string(kv[key].second) + ": "; };
  auto wrap = [&](const std::string &key, auto &&fn) {
    try {
      fn(kv[key].first);
    } catch (const ConfigError &e) {
      throw ConfigError(at(key) + key + ": " + e.what());
    }
  };

  if (!kv.count("mode"))
    throw ConfigError("missing 'mode'");
  for (const auto &[key, entry] : kv) {
    const std::string &v = entry.first;
    if (key == "mode") {
      const std::map<std::string, RunMode> modes{
          {"decay", RunMode::Decay},     {"spectrum", RunMode::Spectrum},
          {"field", RunMode::Field},     {"asymptotics", RunMode::Asymptotics},
          {"angular", RunMode::Angular}, {"validate", RunMode::Validate}};
      if (!modes.count(v))
        throw ConfigError(at(key) + "unknown mode '" + v + "'");
      cfg.mode = modes.at(v);
    } else if (key == "preset") {
      if (v == "hydrogen")
        cfg.preset = Preset::Hydrogen;
      else if (v == "synthetic")
        cfg.preset = Preset::Synthetic;
      else
        throw ConfigError(at(key) + "unknown preset '" + v + "'");
    } else if (key == "m_e") {
      wrap(key, [&](const std::string &s) { cfg.m_e = parse_int(s); });
      if (std::abs(cfg.m_e) > 1)
        throw ConfigError(at(key) + "m_e must be -1, 0 or 1");
    } else if (key == "A" || key == "B" || key == "p" || key == "t" || key == "phi" ||
               key == "tol") {
      double x = 0.0;
      wrap(key, [&](const std::string &s) { x = parse_number(s); });
      if (key == "A")
        cfg.A = x;
      else if (key == "B")
        cfg.B = x;
      else if (key == "p")
        cfg.p = x;
      else if (key == "t")
        cfg.t = x;
      else if (key == "phi")
        cfg.phi = x;
      else
        cfg.tol = x;
    } else if (key == "tau_grid" || key == "x_grid" || key == "r_grid" || key == "theta_grid") {
      std::vector<double> g;
      wrap(key, [&](const std::string &s) { g = parse_grid(s); });
      if (key == "tau_grid")
        cfg.tau_grid = g;
      else if (key == "x_grid")
        cfg.x_grid = g;
      else if (key == "r_grid")
        cfg.r_grid = g;
      else
        cfg.theta_grid = g;
    } else {
      throw ConfigError(at(key) + "unknown key '" + key + "'");
    }
  }

  if (cfg.preset == Preset::Hydrogen && (cfg.A || cfg.B))
    throw ConfigError("hydrogen preset fixes A and B; remove the overrides");
  if (cfg.preset == Preset::Synthetic) {
    if (!cfg.A || !cfg.B)
      throw ConfigError("synthetic preset requires A and B");
    if (!(*cfg.A > 0.0) || !(*cfg.B > 0.0))
      throw ConfigError("synthetic preset needs A > 0 and B > 0");
    if (cfg.t)
      throw ConfigError("synthetic preset is dimensionless; give the time as p");
  }
  if (cfg.p && cfg.t)
    throw ConfigError("give the time as either p or t, not both");
  if ((cfg.p && *cfg.p < 0.0) || (cfg.t && *cfg.t < 0.0))
    throw ConfigError("time must be nonnegative");
  if (!(cfg.tol > 0.0) || cfg.tol >= 1e-2)
    throw ConfigError("tol must lie in (0, 1e-2)");
  for (double r : cfg.r_grid)
    if (!(r > 0.0))
      throw ConfigError("r_grid values must be positive");
  for (double tau : cfg.tau_grid)
    if (tau < 0.0)
      throw ConfigError("tau_grid values must be nonnegative");
  const bool field_like = cfg.mode == RunMode::Field || cfg.mode == RunMode::Asymptotics;
  if (field_like && !cfg.p && !cfg.t)
    throw ConfigError(std::string(to_string(cfg.mode)) + " mode needs a time (p or t)");
  if (cfg.mode == RunMode::Validate && cfg.preset != Preset::Hydrogen)
    throw ConfigError("validate mode runs on the hydrogen preset");
  return cfg;
}

void fill_defaults(RunConfig &cfg) {
  if (cfg.tau_grid.empty())
    cfg.tau_grid = parse_grid("linspace(0,5,21)");
  if (cfg.x_grid.empty())
    cfg.x_grid = parse_grid("linspace(-10,10,41)");
  if (cfg.theta_grid.empty())
    cfg.theta_grid = cfg.mode == RunMode::Angular ? parse_grid("linspace(0,3.141592653589793,25)")
                                                  : std::vector<double>{1.5707963267948966};
  if (cfg.r_grid.empty())
    cfg.r_grid = cfg.preset == Preset::Hydrogen ? parse_grid("logspace(1e-8,1e-6,17)")
                                                : parse_grid("logspace(1e3,1e5,17)");
}

} // namespace lymanfield
