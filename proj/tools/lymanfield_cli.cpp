// lymanfield: decay curves, spectra, field scans, far-field fits and the
// validation suite, driven by a text config. See README.md for the formats.

#include "lymanfield/asymptotics.hpp"
#include "lymanfield/config.hpp"
#include "lymanfield/csv.hpp"
#include "lymanfield/field.hpp"
#include "lymanfield/friedrichs.hpp"
#include "lymanfield/result_cache.hpp"
#include "lymanfield/validation.hpp"

#include <CLI11.hpp>
#include <boost/version.hpp>
#include <omp.h>

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <sstream>

using namespace lymanfield;

namespace {

struct Meta {
  std::vector<std::pair<std::string, std::string>> kv;
  void add(const std::string &k, const std::string &v) { kv.emplace_back(k, v); }
  void add(const std::string &k, double v) { add(k, format_double(v)); }
};

std::string hex64(unsigned long long h) {
  std::ostringstream s;
  s << std::hex << h;
  return s.str();
}

// the time in the spectrum's own unit (s for hydrogen, 1/(cK) otherwise)
double spectrum_time(const RunConfig &cfg, const DecaySpectrum &spec) {
  if (cfg.t)
    return *cfg.t;
  return cfg.p.value_or(0.0) / spec.unit();
}

int run_decay(const RunConfig &cfg, const DecaySpectrum &spec, std::ostream &out) {
  const bool h = spec.preset() == Preset::Hydrogen;
  CsvWriter csv(out, {"gamma_t[1]", h ? "t[s]" : "t[1/(cK)]", "re_c0[1]", "im_c0[1]",
                      "abs2_c0[1]", "abs_c0_weak[1]", "rel_deviation[1]", "unitarity[1]",
                      "status"});
  int bad = 0;
  for (double tau : cfg.tau_grid) {
    const double t = tau / spec.gamma_a();
    std::string status = "ok";
    cplx c0 = std::nan("");
    double dev = std::nan(""), norm = std::nan("");
    const double weak = std::exp(-0.5 * tau);
    try {
      c0 = c0_exact(spec, t).value;
      dev = std::abs(c0) / weak - 1.0;
      norm = norm_check(spec, t);
    } catch (const std::exception &e) {
      status = std::string("failed: ") + e.what();
      ++bad;
    }
    csv << tau << t << c0.real() << c0.imag() << std::norm(c0) << weak << dev << norm << status;
    csv.end_row();
  }
  return bad ? 1 : 0;
}

int run_spectrum(const RunConfig &cfg, const DecaySpectrum &spec, std::ostream &out) {
  const bool h = spec.preset() == Preset::Hydrogen;
  const std::string fu = h ? "[rad/s]" : "[cK]", du = h ? "[s/rad]" : "[1/(cK)]";
  CsvWriter csv(out, {"x[1]", "omega" + fu, "Gamma" + fu, "Delta" + fu, "g" + du, "g_w" + du,
                      "status"});
  int bad = 0;
  for (double x : cfg.x_grid) {
    const double w = spec.omega_shifted() + x * spec.gamma_a();
    std::string status = "ok";
    double G = std::nan(""), D = std::nan(""), g = std::nan(""), gw = std::nan("");
    try {
      if (w < 0.0)
        throw std::invalid_argument("omega < 0");
      G = spec.gamma(w);
      D = spec.lamb_shift(w);
      g = spec.g(w);
      gw = spec.g_w(w);
    } catch (const std::exception &e) {
      status = std::string("failed: ") + e.what();
      ++bad;
    }
    csv << x << w << G << D << g << gw << status;
    csv.end_row();
  }
  return bad ? 1 : 0;
}

FieldMode field_mode(const DecaySpectrum &spec) {
  return spec.preset() == Preset::Hydrogen ? FieldMode::Physical : FieldMode::Dimensionless;
}

std::vector<std::string> field_header(const DecaySpectrum &spec, bool with_asym) {
  const bool h = spec.preset() == Preset::Hydrogen;
  std::vector<std::string> hd{h ? "r[m]" : "r_prime[1]", "theta[rad]", "phi[rad]",
                              h ? "t[s]" : "p[1]", h ? "density[J/m^3]" : "density[1]",
                              h ? "error[J/m^3]" : "error[1]"};
  if (with_asym)
    hd.push_back(h ? "density_asymptotic[J/m^3]" : "density_asymptotic[1]");
  hd.push_back("status");
  return hd;
}

void write_point(CsvWriter &csv, const ScanPoint &sp) {
  csv << sp.point.r << sp.point.theta << sp.point.phi << sp.point.t << sp.density
      << sp.error_estimate;
}

int run_field(const RunConfig &cfg, const DecaySpectrum &spec, std::ostream &out) {
  const FieldMode mode = field_mode(spec);
  const double t = mode == FieldMode::Physical ? spectrum_time(cfg, spec) : *cfg.p;
  FieldOptions opt;
  opt.rel_tol = cfg.tol;
  CsvWriter csv(out, field_header(spec, false));
  int bad = 0;
  for (double r : cfg.r_grid) {
    const auto scan = angular_scan(cfg.theta_grid, r, cfg.phi, t, mode, spec, opt);
    for (const auto &sp : scan.points) {
      write_point(csv, sp);
      csv << (sp.ok ? std::string("ok") : "failed: " + sp.failure);
      csv.end_row();
      bad += !sp.ok;
    }
  }
  return bad ? 1 : 0;
}

int run_asymptotics(const RunConfig &cfg, const DecaySpectrum &spec, std::ostream &out,
                    Meta &meta) {
  const FieldMode mode = field_mode(spec);
  const double t = mode == FieldMode::Physical ? spectrum_time(cfg, spec) : *cfg.p;
  const double theta = cfg.theta_grid.front();
  FieldOptions opt;
  opt.rel_tol = cfg.tol;
  const auto scan = radial_scan(cfg.r_grid, theta, cfg.phi, t, mode, spec, opt);
  CsvWriter csv(out, field_header(spec, true));
  int bad = 0;
  for (const auto &sp : scan.points) {
    double asym;
    if (mode == FieldMode::Physical) {
      asym = energy_density_asymptotic(sp.point.r, theta, t, spec.atom().m_e, spec).value.real();
    } else {
      const DimensionlessParams d{scan.A, scan.B, t, sp.point.r};
      asym = energy_density_asymptotic_scaled(d, theta, spec.atom().m_e).value.real();
    }
    write_point(csv, sp);
    csv << asym << (sp.ok ? std::string("ok") : "failed: " + sp.failure);
    csv.end_row();
    bad += !sp.ok;
  }
  try {
    const auto fit = fit_power_law(scan);
    meta.add("fit_exponent", fit.exponent);
    meta.add("fit_stderr", fit.stderr_);
    meta.add("fit_points_used", std::to_string(fit.used));
    meta.add("fit_points_rejected", std::to_string(fit.rejected));
    std::cerr << "power-law fit: exponent " << fit.exponent << " +- " << fit.stderr_ << " ("
              << fit.used << " points, " << fit.rejected << " rejected)\n";
  } catch (const std::exception &e) {
    meta.add("fit_error", e.what());
    std::cerr << "power-law fit failed: " << e.what() << '\n';
    return 1;
  }
  return bad ? 1 : 0;
}

int run_angular(const RunConfig &cfg, bool numeric, const DecaySpectrum &spec,
                std::ostream &out) {
  const int m = spec.atom().m_e;
  if (!numeric) {
    CsvWriter csv(out, {"theta[rad]", "gamma[1]"});
    for (double th : cfg.theta_grid) {
      csv << th << gamma_angular(m, th);
      csv.end_row();
    }
    return 0;
  }
  const FieldMode mode = field_mode(spec);
  const double t = mode == FieldMode::Physical ? spectrum_time(cfg, spec) : *cfg.p;
  FieldOptions opt;
  opt.rel_tol = cfg.tol;
  const auto scan = angular_scan(cfg.theta_grid, cfg.r_grid.front(), cfg.phi, t, mode, spec, opt);
  double peak = 0.0;
  for (const auto &sp : scan.points)
    peak = std::max(peak, sp.ok ? sp.density : 0.0);
  const std::string du = mode == FieldMode::Physical ? "[J/m^3]" : "[1]";
  CsvWriter csv(out, {"theta[rad]", "gamma[1]", "density" + du, "density_normalized[1]",
                      "error" + du, "status"});
  int bad = 0;
  for (const auto &sp : scan.points) {
    csv << sp.point.theta << gamma_angular(m, sp.point.theta) << sp.density
        << (peak > 0.0 ? sp.density / peak : std::nan("")) << sp.error_estimate
        << (sp.ok ? std::string("ok") : "failed: " + sp.failure);
    csv.end_row();
    bad += !sp.ok;
  }
  return bad ? 1 : 0;
}

int run_validate(const DecaySpectrum &spec, std::ostream &out) {
  CsvWriter csv(out, {"check", "passed", "measured[1]", "tolerance[1]", "detail"});
  int failed = 0;
  for (const auto &c : run_validation(spec)) {
    csv << c.name << (c.passed ? "pass" : "FAIL") << c.measured << c.tolerance << c.detail;
    csv.end_row();
    failed += !c.passed;
  }
  std::cerr << (failed ? std::to_string(failed) + " validation check(s) failed\n"
                       : std::string("all validation checks passed\n"));
  return failed ? 1 : 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Lyman-alpha single-photon emission: decay, spectrum and far field"};
  std::string config_path, out_path, cache_path;
  int threads = 0;
  bool verbose = false;
  app.add_option("--config", config_path, "run configuration file")->required();
  app.add_option("--out", out_path, "CSV output path (default: stdout)");
  app.add_option("--cache", cache_path, "result cache for spectral constants");
  app.add_option("--threads", threads, "OpenMP threads (default: runtime choice)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--verbose", verbose, "progress and warnings on stderr");
  CLI11_PARSE(app, argc, argv);

  if (threads > 0)
    omp_set_num_threads(threads);

  std::ifstream cf(config_path);
  if (!cf) {
    std::cerr << "cannot read config " << config_path << '\n';
    return 2;
  }
  const std::string text((std::istreambuf_iterator<char>(cf)), std::istreambuf_iterator<char>());

  RunConfig cfg;
  bool angular_numeric = false;
  try {
    cfg = parse_config(text);
    angular_numeric = cfg.mode == RunMode::Angular && cfg.r_grid.size() == 1 && (cfg.p || cfg.t);
    fill_defaults(cfg);
  } catch (const ConfigError &e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  }

  std::unique_ptr<ResultCache> cache;
  try {
    if (!cache_path.empty())
      cache = std::make_unique<ResultCache>(cache_path);
  } catch (const std::exception &e) {
    std::cerr << "cache error: " << e.what() << '\n';
    return 2;
  }
  bool hit = false;
  DecaySpectrum spec = cached_spectrum(cache.get(), cfg.preset, cfg.m_e, cfg.A.value_or(0.0),
                                       cfg.B.value_or(0.0), &hit);
  if (cache && !hit)
    cache->save();
  if (verbose) {
    std::cerr << "mode " << to_string(cfg.mode) << ", preset " << to_string(cfg.preset)
              << ", m_e " << cfg.m_e << (cache ? (hit ? ", cache hit" : ", cache stored") : "")
              << '\n';
    for (const auto &w : spec.warnings())
      std::cerr << "warning: " << w << '\n';
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "cannot write " << out_path << '\n';
      return 2;
    }
  }
  std::ostream &out = out_path.empty() ? std::cout : file;

  Meta meta;
  meta.add("config_hash_fnv1a64", hex64(fnv1a64(text)));
  meta.add("mode", to_string(cfg.mode));
  meta.add("preset", to_string(cfg.preset));
  meta.add("m_e", std::to_string(cfg.m_e));
  meta.add("field_rel_tol", cfg.tol);
  meta.add("gamma_a", spec.gamma_a());
  meta.add("delta_a", spec.delta_a());
  meta.add("omega_a", spec.omega_a());
  meta.add("coupling_strength", spec.coupling_strength());
  meta.add("cache", cache ? (hit ? "hit" : "stored") : "none");
  meta.add("code_version", code_version);
  meta.add("boost_version", std::to_string(BOOST_VERSION));
  meta.add("compiler", __VERSION__);
  meta.add("openmp", std::to_string(_OPENMP));
  for (std::size_t i = 0; i < spec.warnings().size(); ++i)
    meta.add("warning_" + std::to_string(i), spec.warnings()[i]);

  int status = 0;
  try {
    switch (cfg.mode) {
    case RunMode::Decay:
      status = run_decay(cfg, spec, out);
      break;
    case RunMode::Spectrum:
      status = run_spectrum(cfg, spec, out);
      break;
    case RunMode::Field:
      status = run_field(cfg, spec, out);
      break;
    case RunMode::Asymptotics:
      status = run_asymptotics(cfg, spec, out, meta);
      break;
    case RunMode::Angular:
      status = run_angular(cfg, angular_numeric, spec, out);
      break;
    case RunMode::Validate:
      status = run_validate(spec, out);
      break;
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    status = 1;
  }
  meta.add("exit_status", std::to_string(status));

  if (!out_path.empty()) {
    std::ofstream m(out_path + ".meta");
    for (const auto &[k, v] : meta.kv)
      m << k << " = " << v << '\n';
  }
  return status;
}
