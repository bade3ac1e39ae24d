#include "lymanfield/validation.hpp"

#include "lymanfield/asymptotics.hpp"
#include "lymanfield/coupling.hpp"
#include "lymanfield/oscillatory.hpp"
#include "lymanfield/special_functions.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

namespace lymanfield {

namespace {
constexpr double pi = std::numbers::pi;

struct Runner {
  std::vector<ValidationCheck> out;

  // fn returns the measured deviation; passes when it is <= tol
  void check(const std::string &name, double tol, const std::function<double()> &fn) {
    try {
      const double v = fn();
      out.push_back({name, v <= tol, v, tol, ""});
    } catch (const std::exception &e) {
      out.push_back({name, false, std::nan(""), tol, e.what()});
    }
  }
};
} // namespace

std::vector<ValidationCheck> run_validation(const DecaySpectrum &spec) {
  if (spec.preset() != Preset::Hydrogen)
    throw std::invalid_argument("run_validation: hydrogen preset only");
  const AtomParams &a = spec.atom();
  const double G = spec.gamma_a();
  Runner r;

  r.check("decay_rate_closed_form", 1e-4, [&] {
    const double closed = std::pow(2.0 / 3.0, 8) * std::pow(a.alpha, 5) * a.m * a.c * a.c / a.hbar;
    return std::abs(G / closed - 1.0);
  });
  r.check("lamb_shift_window_robust", 1e-8, [&] {
    return lamb_shift_delta(spec, spec.omega_a()).relative_change;
  });
  r.check("lamb_shift_table_vs_direct", 1e-6, [&] {
    double worst = 0.0;
    for (double x : {-30.0, -2.0, -0.3, 0.7, 5.0, 80.0}) {
      const double w = spec.omega_shifted() + x * G;
      const double direct = spec.lamb_shift(w) - spec.delta_a();
      worst = std::max(worst, std::abs(spec.lamb_shift_offset(w) - direct) / G);
    }
    return worst;
  });
  r.check("spectral_normalization", 1e-3,
          [&] { return std::abs(integral_of_g(spec).value - 1.0); });
  r.check("c0_at_zero", 1e-3, [&] { return std::abs(c0_exact(spec, 0.0).value - 1.0); });
  r.check("weisskopf_wigner_deviation", 2e-2, [&] {
    double worst = 0.0;
    for (double tau = 0.5; tau <= 5.0; tau += 0.5) {
      const double t = tau / G;
      worst = std::max(worst, std::abs(std::abs(c0_exact(spec, t).value) /
                                           std::exp(-0.5 * tau) - 1.0));
    }
    return worst;
  });
  r.check("unitarity", 1e-2, [&] {
    double worst = 0.0;
    for (double tau : {0.0, 1.0, 3.0})
      worst = std::max(worst, std::abs(norm_check(spec, tau / G) - 1.0));
    return worst;
  });
  r.check("fourier_sine_oracle", 1e-10, [&] {
    auto S = [](double q) { return cplx(std::exp(-q)); };
    double worst = 0.0;
    for (double rp : {1.0, 10.0, 1e3}) {
      const double s = fourier_sin(S, rp).value.real();
      const double c = fourier_cos(S, rp).value.real();
      worst = std::max({worst, std::abs(s - rp / (1.0 + rp * rp)),
                        std::abs(c - 1.0 / (1.0 + rp * rp))});
    }
    return worst;
  });
  r.check("time_function_identity", 1e-12, [&] {
    double worst = std::abs(T_func({0.05, 0.3, 0.0, 1.0}));
    for (double p : {0.1, 1.0, 5.0, 40.0}) {
      const DimensionlessParams d{0.05, 0.3, p, 1.0};
      worst = std::max(worst, std::abs(T_from_endpoints(d) - T_func(d)) / std::abs(T_func(d)));
    }
    return worst;
  });
  r.check("dipole_angular_products", 1e-12, [&] {
    double worst = 0.0;
    for (double th : {0.0, 0.4, 1.1, pi / 2, 2.5}) {
      const AngularPoint pt{th, 0.8};
      const double y0 = norm2(vector_spherical_harmonic(1, 0, pt));
      const double y1 = norm2(vector_spherical_harmonic(1, 1, pt));
      worst = std::max({worst, std::abs(y0 - 3.0 / (8.0 * pi) * std::pow(std::sin(th), 2)),
                        std::abs(y1 - 3.0 / (16.0 * pi) * (1.0 + std::pow(std::cos(th), 2)))});
    }
    return worst;
  });
  r.check("angular_distribution_peak", 1e-15,
          [&] { return std::abs(gamma_angular(0, pi / 2) - 1.0); });
  r.check("coupling_overlap_ratio", 1e-4, [&] {
    const double k = 0.7746 * a.K;
    const CouplingFunction cf(a);
    return std::abs(coupling_overlap_oracle(a, k, 1, a.m_e).magnitude / cf.rho(k) - 1.0);
  });
  return r.out;
}

} // namespace lymanfield
