// Acceptance run: one line per criterion with the measured value, the pinned
// tolerance and the runtime against its budget. Exit status is nonzero when
// any criterion fails.

#include "lymanfield/asymptotics.hpp"
#include "lymanfield/coupling.hpp"
#include "lymanfield/field.hpp"
#include "lymanfield/friedrichs.hpp"
#include "lymanfield/oscillatory.hpp"
#include "lymanfield/special_functions.hpp"
#include "lymanfield/units.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

using namespace lymanfield;
constexpr double pi = std::numbers::pi;

namespace {

struct Outcome {
  bool passed;
  double measured;
  double tolerance;
  std::string detail;
};

struct Criterion {
  int id;
  const char *name;
  double budget_s;
  std::function<Outcome()> run;
};

std::string fmt(const char *f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

const DecaySpectrum &hydrogen() {
  static const DecaySpectrum s = DecaySpectrum::hydrogen(make_atom_params(0));
  return s;
}

Outcome decay_rate() {
  const auto &a = hydrogen().atom();
  const double closed = std::pow(2.0 / 3.0, 8) * std::pow(a.alpha, 5) * a.m * a.c * a.c / a.hbar;
  const double rel = std::abs(hydrogen().gamma_a() / closed - 1.0);
  return {rel <= 1e-4, rel, 1e-4, fmt("Gamma_a = %.12e s^-1", hydrogen().gamma_a())};
}

Outcome normalization() {
  const double n = std::abs(integral_of_g(hydrogen()).value - 1.0);
  const double c = std::abs(c0_exact(hydrogen(), 0.0).value - 1.0);
  const double worst = std::max(n, c);
  return {worst <= 1e-3, worst, 1e-3, fmt("|int g - 1| = %.2e, |c0(0) - 1| = %.2e", n, c)};
}

Outcome weisskopf_wigner() {
  double worst = 0.0, at = 0.0;
  for (int i = 0; i <= 20; ++i) {
    const double tau = 0.25 * i;
    const double dev =
        std::abs(std::abs(c0_exact(hydrogen(), tau / hydrogen().gamma_a()).value) / std::exp(-0.5 * tau) -
                 1.0);
    if (dev > worst) {
      worst = dev;
      at = tau;
    }
  }
  return {worst < 2e-2, worst, 2e-2, fmt("worst at Gamma t = %.2f over 21 points", at)};
}

Outcome unitarity() {
  double worst = 0.0;
  std::string d;
  for (double tau : {0.0, 1.0, 3.0}) {
    const double v = norm_check(hydrogen(), tau / hydrogen().gamma_a());
    worst = std::max(worst, std::abs(v - 1.0));
    d += fmt("%.0f: %.6f ", tau, v);
  }
  return {worst <= 1e-2, worst, 1e-2, "norm at Gamma t = " + d};
}

Outcome fourier_oracle() {
  auto S = [](double q) { return cplx(std::exp(-q)); };
  double worst = 0.0;
  for (double r : {1.0, 10.0, 1e3}) {
    worst = std::max(worst, std::abs(fourier_sin(S, r).value - r / (1.0 + r * r)));
    worst = std::max(worst, std::abs(fourier_cos(S, r).value - 1.0 / (1.0 + r * r)));
  }
  return {worst <= 1e-10, worst, 1e-10, "absolute error, sine and cosine, r' = 1, 10, 1e3"};
}

Outcome asymptotic_ratio() {
  std::array<double, 2> resid{};
  std::array<cplx, 2> ratio{};
  const std::array<double, 2> rs{1e3, 1e4}, tol{0.05, 0.005};
  bool ok = true;
  double worst_frac = 0.0;
  for (int i = 0; i < 2; ++i) {
    const DimensionlessParams d{0.05, 0.3, 5.0, rs[i]};
    ratio[i] = compute_FL_scaled(d, 1).F[1] / F1_asymptotic_scaled(d, 1).value;
    resid[i] = std::abs(ratio[i] - 1.0);
    ok = ok && resid[i] <= tol[i];
    worst_frac = std::max(worst_frac, resid[i] / tol[i]);
  }
  // residual must shrink at least one power of r' over the decade
  const double order = std::log10(resid[0] / resid[1]);
  ok = ok && order >= 1.0;
  return {ok, worst_frac, 1.0,
          fmt("|ratio - 1| = %.3e (1e3), %.3e (1e4); residual decay order %.2f", resid[0], resid[1],
              order) +
              " (measured/tolerance shown)"};
}

Outcome density_slope() {
  std::vector<double> rs;
  for (int i = 0; i <= 16; ++i)
    rs.push_back(std::pow(10.0, 3.0 + i / 8.0));
  const auto scan = radial_scan(rs, pi / 2, 0.0, 5.0, FieldMode::Dimensionless,
                                DecaySpectrum::synthetic(0.05, 0.3));
  const auto fit = fit_power_law(scan);
  const double dev = std::abs(fit.exponent + 6.0);
  return {dev <= 0.1 && scan.all_ok(), dev, 0.1,
          fmt("exponent %.5f +- %.1e from %.0f points", fit.exponent, fit.stderr_,
              double(fit.used))};
}

Outcome angular_shape() {
  std::vector<double> th(25);
  for (int i = 0; i < 25; ++i)
    th[i] = pi * i / 24.0;
  double worst = 0.0;
  std::string d;
  for (int m : {0, 1}) {
    const auto spec = DecaySpectrum::synthetic(0.05, 0.3, m);
    const auto scan = angular_scan(th, 1e4, 0.0, 5.0, FieldMode::Dimensionless, spec);
    double peak = 0.0, gpeak = 0.0;
    for (std::size_t i = 0; i < th.size(); ++i) {
      peak = std::max(peak, scan.points[i].density);
      gpeak = std::max(gpeak, gamma_angular(m, th[i]));
    }
    double w = 0.0;
    for (std::size_t i = 0; i < th.size(); ++i)
      w = std::max(w, std::abs(scan.points[i].density / peak - gamma_angular(m, th[i]) / gpeak));
    worst = std::max(worst, w);
    d += fmt("m_e = %.0f: %.3f ", m, w);
  }
  return {worst <= 0.02, worst, 0.02, "max pointwise deviation at r' = 1e4, " + d};
}

Outcome time_function() {
  const double t0 = std::abs(T_func({0.05, 0.3, 0.0, 1e3}));
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> up(0.01, 50.0);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const DimensionlessParams d{0.05, 0.3, up(rng), 1e3};
    worst = std::max(worst, std::abs(T_from_endpoints(d) - T_func(d)) / std::abs(T_func(d)));
  }
  const bool ok = t0 <= 1e-14 && worst <= 1e-12;
  return {ok, worst, 1e-12, fmt("|T(0)| = %.1e (tol 1e-14); endpoint rebuild rel. error shown", t0)};
}

Outcome special_functions() {
  using GL30 = boost::math::quadrature::gauss<double, 30>;
  using GL20 = boost::math::quadrature::gauss<double, 20>;
  // orthonormality of Y^L_{1,M}
  double ortho = 0.0;
  const int nphi = 24;
  for (int L = 0; L < 3; ++L)
    for (int M = -1; M <= 1; ++M)
      for (int L2 = 0; L2 < 3; ++L2)
        for (int M2 = -1; M2 <= 1; ++M2) {
          cplx sum = 0.0;
          for (int j = 0; j < nphi; ++j) {
            const double ph = 2 * pi * j / nphi;
            auto part = [&](double u, bool im) {
              const AngularPoint pt{std::acos(u), ph};
              const cplx v =
                  hdot(vector_spherical_harmonic(L, M, pt), vector_spherical_harmonic(L2, M2, pt));
              return im ? v.imag() : v.real();
            };
            sum += cplx(GL30::integrate([&](double u) { return part(u, false); }, -1.0, 1.0),
                        GL30::integrate([&](double u) { return part(u, true); }, -1.0, 1.0)) *
                   (2 * pi / nphi);
          }
          ortho = std::max(ortho, std::abs(sum - cplx(L == L2 && M == M2)));
        }
  // dipole dot products
  double dots = 0.0;
  for (double th : {0.0, 0.3, 0.9, pi / 2, 2.2, 3.0}) {
    const AngularPoint pt{th, 1.3};
    const double s = std::sin(th), c = std::cos(th);
    dots = std::max(dots, std::abs(norm2(vector_spherical_harmonic(1, 0, pt)) - 3.0 / (8 * pi) * s * s));
    for (int m : {-1, 1})
      dots = std::max(dots, std::abs(norm2(vector_spherical_harmonic(1, m, pt)) -
                                     3.0 / (16 * pi) * (1 + c * c)));
  }
  // curl eigenrelation: central differences, error ratio on halving h
  auto mode = [](double k, int M, int lam, std::array<double, 3> x) {
    const double r = std::hypot(x[0], x[1], x[2]);
    return helicity_mode(k, M, lam, r, {std::acos(x[2] / r), std::atan2(x[1], x[0])});
  };
  auto curl_err = [&](double k, int M, int lam, std::array<double, 3> x, double h) {
    std::array<std::array<cplx, 3>, 3> d{};
    for (int i = 0; i < 3; ++i) {
      auto xp = x, xm = x;
      xp[i] += h;
      xm[i] -= h;
      const auto fp = mode(k, M, lam, xp), fm = mode(k, M, lam, xm);
      for (int j = 0; j < 3; ++j)
        d[i][j] = (fp[j] - fm[j]) / (2.0 * h);
    }
    ComplexVector3 curl;
    curl[0] = d[1][2] - d[2][1];
    curl[1] = d[2][0] - d[0][2];
    curl[2] = d[0][1] - d[1][0];
    return std::sqrt(norm2(curl - double(lam) * k * mode(k, M, lam, x)));
  };
  std::vector<double> orders;
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 24; ++i) {
    std::array<double, 3> x{u(rng), u(rng), u(rng)};
    if (std::hypot(x[0], x[1], x[2]) < 0.3)
      x[2] += 1.0;
    const int M = i % 3 - 1, lam = i % 2 ? 1 : -1;
    orders.push_back(std::log2(curl_err(1.7, M, lam, x, 1e-2) / curl_err(1.7, M, lam, x, 5e-3)));
  }
  std::sort(orders.begin(), orders.end());
  const double order = orders[orders.size() / 2];
  // wavefunction norms
  double wf = 0.0;
  {
    const auto a = make_atom_params(0);
    boost::math::quadrature::exp_sinh<double> es;
    const double n = es.integrate([&](double x) {
      const double g = ground_wavefunction(a, x * a.r_B);
      return 4 * pi * x * x * g * g * std::pow(a.r_B, 3);
    });
    wf = std::abs(n - 1.0);
    for (int m : {-1, 0, 1}) {
      const auto am = make_atom_params(m);
      double total = 0.0;
      for (int j = 0; j < 16; ++j) {
        const double ph = 2 * pi * j / 16;
        total += GL20::integrate(
                     [&](double cu) {
                       return es.integrate([&](double x) {
                         const cplx v = excited_wavefunction(am, x * am.r_B, std::acos(cu), ph, m);
                         return x * x * std::norm(v) * std::pow(am.r_B, 3);
                       });
                     },
                     -1.0, 1.0) *
                 (2 * pi / 16);
      }
      wf = std::max(wf, std::abs(total - 1.0));
    }
  }
  const bool ok = ortho <= 1e-10 && dots <= 1e-12 && std::abs(order - 2.0) <= 0.2 && wf <= 1e-9;
  return {ok, ortho, 1e-10,
          fmt("orthonormality %.1e; dot products %.1e (tol 1e-12); curl order %.3f", ortho, dots,
              order) +
              fmt(" (2 +- 0.2); wavefunction norms %.1e (tol 1e-9)", wf)};
}

Outcome coupling_oracle() {
  double spread = 0.0, off = 0.0;
  for (int m : {-1, 0, 1}) {
    const auto a = make_atom_params(m);
    const CouplingFunction cf(a);
    std::vector<double> ratios;
    for (double kk : {0.2, 0.7746, 2.0}) {
      const double k = kk * a.K;
      ratios.push_back(coupling_overlap_oracle(a, k, 1, m).magnitude / cf.rho(k));
    }
    for (double r : ratios) {
      spread = std::max(spread, std::abs(r / ratios.front() - 1.0));
      off = std::max(off, std::abs(r - 1.0));
    }
  }
  // a constant other than 1 is reported, not failed
  const bool ok = spread <= 1e-3;
  return {ok, spread, 1e-3,
          fmt("ratio spread across k; |ratio - 1| = %.2e", off) +
              (off <= 1e-4 ? std::string(" (conventions align, tol 1e-4)")
                           : std::string(" (uniform constant differs from 1)"))};
}

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "decay_rate_closed_form", 1.0, decay_rate},
      {2, "spectral_normalization", 10.0, normalization},
      {3, "weisskopf_wigner_agreement", 60.0, weisskopf_wigner},
      {4, "unitarity", 60.0, unitarity},
      {5, "fourier_quadrature_oracle", 1.0, fourier_oracle},
      {6, "F1_asymptotic_ratio", 120.0, asymptotic_ratio},
      {7, "density_slope_r^-6", 600.0, density_slope},
      {8, "angular_distribution_shape", 300.0, angular_shape},
      {9, "time_function_identities", 1.0, time_function},
      {10, "special_function_suite", 60.0, special_functions},
      {11, "coupling_overlap_oracle", 600.0, coupling_oracle},
  };
  int failed = 0;
  for (const auto &c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o = {false, std::nan(""), std::nan(""), std::string("exception: ") + e.what()};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = dt <= c.budget_s;
    const bool pass = o.passed && in_time;
    failed += !pass;
    std::printf("%s criterion %2d %-28s measured=%.3e tol=%.1e runtime=%.2fs/%.0fs%s  %s\n",
                pass ? "PASS" : "FAIL", c.id, c.name, o.measured, o.tolerance, dt, c.budget_s,
                in_time ? "" : " (over budget)", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed ? 1 : 0;
}
