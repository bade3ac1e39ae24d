#include "lymanfield/friedrichs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <boost/math/tools/roots.hpp>

namespace lymanfield {

namespace {
constexpr double pi = std::numbers::pi;
constexpr int kChebNodes = 24;

struct ChebPanel {
  double lo, hi;
  std::array<double, kChebNodes> c;

  double operator()(double x) const {
    const double t = (2.0 * x - lo - hi) / (hi - lo);
    double b1 = 0.0, b2 = 0.0;
    for (int k = kChebNodes - 1; k >= 1; --k) {
      const double b0 = 2.0 * t * b1 - b2 + c[k];
      b2 = b1;
      b1 = b0;
    }
    return t * b1 - b2 + 0.5 * c[0];
  }
};

// Panel edges in x growing geometrically away from the peak, widths capped.
std::vector<double> peak_panels(double x_lo, double x_hi, double cap) {
  std::vector<double> right{0.0}, left;
  double step = std::min(0.05, cap);
  for (double x = 0.0; x < x_hi;) {
    x = std::min(x + step, x_hi);
    right.push_back(x);
    step = std::min(step * 1.15, cap);
  }
  step = std::min(0.05, cap);
  for (double x = 0.0; x > x_lo;) {
    x = std::max(x - step, x_lo);
    left.push_back(x);
    step = std::min(step * 1.15, cap);
  }
  std::vector<double> edges(left.rbegin(), left.rend());
  edges.insert(edges.end(), right.begin(), right.end());
  return edges;
}

// Kronrod sum over panels, evaluated in parallel and added in fixed order.
template <class F> QuadResult<cplx> panel_sum(F &&f, const std::vector<double> &edges) {
  const long n = static_cast<long>(edges.size()) - 1;
  std::vector<QuadResult<cplx>> parts(static_cast<std::size_t>(std::max(n, 0L)));
#pragma omp parallel for schedule(dynamic, 64)
  for (long i = 0; i < n; ++i)
    parts[i] = gauss_kronrod15(f, edges[i], edges[i + 1]);
  QuadResult<cplx> out{0.0, 0.0};
  for (const auto &p : parts) {
    out.value += p.value;
    out.error += p.error;
  }
  return out;
}

// Lorentzian mass beyond the truncation points of the x range.
double truncation_bound(double x_lo, double x_hi) {
  double b = 1.0 / (pi * x_hi);
  if (x_lo <= -DecaySpectrum::x_max)
    b += 1.0 / (pi * -x_lo);
  return b;
}
} // namespace

struct DeltaTableHolder {
  std::once_flag once;
  std::vector<ChebPanel> panels;
};

double coupling_shape(double nu) {
  const double d = 1.0 + nu * nu;
  const double d2 = d * d;
  return nu / (d2 * d2);
}

double default_pv_window(double nu) { return std::min(0.5 * nu, 0.5); }

double pv_shape_integral(double nu, double window) {
  if (!(nu > 0.0) || !(window > 0.0) || window > nu)
    throw std::invalid_argument("pv_shape_integral: need 0 < window <= nu");
  const double f0 = coupling_shape(nu);
  auto inner = [&](double s) {
    const double d = nu - s;
    return d == 0.0 ? 0.0 : (coupling_shape(s) - f0) / d;
  };
  auto outer = [&](double s) { return coupling_shape(s) / (nu - s); };
  constexpr double atol = 1e-15, rtol = 1e-13;
  const double a = nu - window, b = nu + window;
  double total = adaptive_integrate(inner, a, b, atol, rtol).value;
  if (a > 0.0)
    total += adaptive_integrate(outer, 0.0, a, atol, rtol).value;
  total += adaptive_integrate_to_infinity(outer, b, atol, rtol).value;
  return total;
}

DecaySpectrum DecaySpectrum::hydrogen(const AtomParams &atom) {
  DecaySpectrum s;
  s.preset_ = Preset::Hydrogen;
  s.atom_ = atom;
  s.unit_ = atom.cK();
  s.G_ = 4.0 * std::pow(2.0 / 3.0, 9) * std::pow(atom.alpha, 3);
  s.omega_a_ = atom.omega_a;
  s.gamma_a_ = gamma_of_omega(atom, atom.omega_a);
  s.delta_a_ = s.lamb_shift(atom.omega_a);
  s.finish();
  return s;
}

DecaySpectrum DecaySpectrum::synthetic(double A, double B, int m_e) {
  if (!(A > 0.0) || !(B > 0.0))
    throw std::invalid_argument("synthetic spectrum: A and B must be positive");
  // nu + (G/2pi) H(nu) = B with G = 2A / f(nu)
  auto F = [&](double nu) {
    return nu + A * pv_shape_integral(nu, default_pv_window(nu)) / (pi * coupling_shape(nu)) -
           B;
  };
  double lo = B;
  while (F(lo) > 0.0) {
    lo *= 0.8;
    if (lo < 1e-8 * B)
      throw std::invalid_argument("synthetic spectrum: no bare frequency below B");
  }
  double hi = lo * 1.05;
  while (F(hi) <= 0.0) {
    lo = hi;
    hi *= 1.05;
    if (hi > 1e3 * B + 10.0)
      throw std::invalid_argument("synthetic spectrum: no bare frequency found");
  }
  boost::uintmax_t iters = 200;
  const auto root = boost::math::tools::toms748_solve(
      F, lo, hi, boost::math::tools::eps_tolerance<double>(50), iters);
  const double nu_a = 0.5 * (root.first + root.second);

  DecaySpectrum s;
  s.preset_ = Preset::Synthetic;
  s.atom_ = make_atom_params(m_e);
  s.unit_ = 1.0;
  s.omega_a_ = nu_a;
  s.G_ = 2.0 * A / coupling_shape(nu_a);
  s.gamma_a_ = 2.0 * A;
  s.delta_a_ = B - nu_a;
  s.finish();
  return s;
}

DecaySpectrum DecaySpectrum::from_constants(Preset preset, const AtomParams &atom, double G,
                                            double omega_a, double gamma_a, double delta_a) {
  if (!(gamma_a > 0.0) || !(G > 0.0))
    throw std::invalid_argument("from_constants: G and gamma_a must be positive");
  DecaySpectrum s;
  s.preset_ = preset;
  s.atom_ = atom;
  s.unit_ = preset == Preset::Hydrogen ? atom.cK() : 1.0;
  s.G_ = G;
  s.omega_a_ = omega_a;
  s.gamma_a_ = gamma_a;
  s.delta_a_ = delta_a;
  s.finish();
  return s;
}

void DecaySpectrum::finish() {
  holder_ = std::make_shared<DeltaTableHolder>();
  const double ratio = gamma_a_ / omega_shifted();
  if (ratio > 0.1) {
    std::ostringstream msg;
    msg << "strong coupling: Gamma_a/Omega_a = " << ratio
        << " exceeds 0.1; the weak-coupling forms are not reliable";
    warnings_.push_back(msg.str());
  }
}

double DecaySpectrum::gamma(double omega) const {
  if (omega < 0.0)
    throw std::invalid_argument("gamma: omega must be nonnegative");
  if (preset_ == Preset::Hydrogen)
    return gamma_of_omega(atom_, omega);
  return G_ * coupling_shape(omega / unit_) * unit_;
}

double DecaySpectrum::rho_tilde(double omega) const {
  if (preset_ == Preset::Hydrogen)
    return CouplingFunction(atom_).rho_tilde(omega);
  return std::sqrt(gamma(omega) / (2.0 * pi));
}

double DecaySpectrum::lamb_shift(double omega) const {
  if (omega < 0.0)
    throw std::invalid_argument("lamb_shift: omega must be nonnegative");
  const double nu = omega / unit_;
  // omega -> 0+: -int (1+s^2)^{-4} ds = -5 pi / 32
  const double H = nu > 0.0 ? pv_shape_integral(nu, default_pv_window(nu)) : -5.0 * pi / 32.0;
  return unit_ * G_ / (2.0 * pi) * H;
}

double DecaySpectrum::x_min() const {
  return std::max(-x_max, -omega_shifted() / gamma_a_);
}

const DeltaTableHolder &DecaySpectrum::table() const {
  std::call_once(holder_->once, [this] {
    std::vector<double> edges{0.0};
    for (int k = 0; k <= 15; ++k)
      edges.push_back(1e-2 * std::pow(10.0, 0.4 * k));
    std::vector<double> all;
    const double lo = x_min();
    for (auto it = edges.rbegin(); it != edges.rend(); ++it)
      if (-*it > lo)
        all.push_back(-*it);
    all.insert(all.begin(), lo);
    for (std::size_t i = 1; i < edges.size(); ++i)
      all.push_back(edges[i]);

    const std::size_t n_panels = all.size() - 1;
    std::vector<double> samples(n_panels * kChebNodes);
#pragma omp parallel for schedule(dynamic)
    for (long idx = 0; idx < static_cast<long>(samples.size()); ++idx) {
      const std::size_t p = idx / kChebNodes, j = idx % kChebNodes;
      const double t = std::cos(pi * (j + 0.5) / kChebNodes);
      const double x = 0.5 * (all[p] + all[p + 1]) + 0.5 * (all[p + 1] - all[p]) * t;
      const double omega = omega_shifted() + gamma_a_ * x;
      samples[idx] = omega > 0.0 ? lamb_shift(omega) - delta_a_ : lamb_shift(0.0) - delta_a_;
    }
    holder_->panels.resize(n_panels);
    for (std::size_t p = 0; p < n_panels; ++p) {
      ChebPanel &cp = holder_->panels[p];
      cp.lo = all[p];
      cp.hi = all[p + 1];
      for (int k = 0; k < kChebNodes; ++k) {
        double s = 0.0;
        for (int j = 0; j < kChebNodes; ++j)
          s += samples[p * kChebNodes + j] * std::cos(pi * k * (j + 0.5) / kChebNodes);
        cp.c[k] = 2.0 * s / kChebNodes;
      }
    }
  });
  return *holder_;
}

double DecaySpectrum::lamb_shift_offset(double omega) const {
  const double x = (omega - omega_shifted()) / gamma_a_;
  const auto &panels = table().panels;
  if (x < panels.front().lo || x > panels.back().hi)
    return lamb_shift(omega) - delta_a_;
  auto it = std::upper_bound(panels.begin(), panels.end(), x,
                             [](double v, const ChebPanel &p) { return v < p.hi; });
  if (it == panels.end())
    --it;
  return (*it)(x);
}

double DecaySpectrum::g_of_x(double x) const {
  const double omega = omega_shifted() + gamma_a_ * x;
  if (omega <= 0.0)
    return 0.0;
  const double gam = gamma(omega) / gamma_a_;
  // omega - omega_a - Delta(omega) = Gamma_a x - (Delta(omega) - Delta_a)
  const double e = x - lamb_shift_offset(omega) / gamma_a_;
  return gam / (2.0 * pi * (e * e + 0.25 * gam * gam));
}

double DecaySpectrum::g(double omega) const {
  if (omega < 0.0)
    throw std::invalid_argument("g: omega must be nonnegative");
  return g_of_x((omega - omega_shifted()) / gamma_a_) / gamma_a_;
}

double DecaySpectrum::g_w(double omega) const {
  const double d = omega - omega_shifted();
  return gamma_a_ / (2.0 * pi * (d * d + 0.25 * gamma_a_ * gamma_a_));
}

DimensionlessParams DecaySpectrum::dimensionless(double t, double r) const {
  if (preset_ == Preset::Hydrogen)
    return to_dimensionless(atom_, gamma_a_, delta_a_, t, r);
  if (t < 0.0 || !(r > 0.0))
    throw std::invalid_argument("dimensionless: need t >= 0 and r > 0");
  return {0.5 * gamma_a_, omega_shifted(), t, r};
}

PvResult lamb_shift_delta(const DecaySpectrum &spec, double omega) {
  if (!(omega > 0.0))
    throw std::invalid_argument("lamb_shift_delta: omega must be positive");
  const double nu = omega / spec.unit();
  const double w = default_pv_window(nu);
  const double scale = spec.unit() * spec.coupling_strength() / (2.0 * pi);
  const double full = scale * pv_shape_integral(nu, w);
  const double half = scale * pv_shape_integral(nu, 0.5 * w);
  const double rel = std::abs(full - half) / std::abs(full);
  if (rel > 1e-8)
    throw QuadratureError("lamb_shift_delta: window choices disagree", full, rel);
  return {full, half, rel};
}

AmplitudeResult c0_exact(const DecaySpectrum &spec, double t) {
  if (t < 0.0)
    throw std::invalid_argument("c0_exact: t must be nonnegative");
  const double tau = spec.gamma_a() * t;
  const double cap = tau > 0.0 ? pi / tau : std::numeric_limits<double>::infinity();
  const double lo = spec.x_min(), hi = DecaySpectrum::x_max;
  auto f = [&](double x) { return spec.g_of_x(x) * std::polar(1.0, -tau * x); };
  const auto r = panel_sum(f, peak_panels(lo, hi, cap));
  const cplx carrier = std::polar(1.0, -spec.omega_shifted() * t);
  return {carrier * r.value, r.error + truncation_bound(lo, hi)};
}

cplx c0_weak(const DecaySpectrum &spec, double t) {
  return std::exp(cplx(-0.5 * spec.gamma_a() * t, -spec.omega_shifted() * t));
}

cplx photon_amplitude_D(const DecaySpectrum &spec, double omega, double t) {
  if (t < 0.0 || omega < 0.0)
    throw std::invalid_argument("photon_amplitude_D: need t >= 0 and omega >= 0");
  const cplx z(0.5 * spec.gamma_a(), spec.omega_shifted() - omega);
  // (e^{-iwt} - e^{-i Omega t - Gamma t/2}) / z = e^{-iwt} t phi(-z t)
  return cplx(0.0, -spec.rho_tilde(omega)) * std::polar(1.0, -omega * t) * t *
         expm1_over(-z * t);
}

double photon_norm(const DecaySpectrum &spec, double t) {
  if (t < 0.0)
    throw std::invalid_argument("photon_norm: t must be nonnegative");
  const double tau = spec.gamma_a() * t;
  if (tau == 0.0)
    return 0.0;
  const double lo = spec.x_min(), hi = DecaySpectrum::x_max;
  auto f = [&](double x) -> cplx {
    const double omega = spec.omega_shifted() + spec.gamma_a() * x;
    if (omega <= 0.0)
      return 0.0;
    const double ratio = spec.gamma(omega) / spec.gamma_a();
    const cplx phi = expm1_over(cplx(-0.5 * tau, tau * x));
    return ratio * tau * tau / (2.0 * pi) * std::norm(phi);
  };
  return panel_sum(f, peak_panels(lo, hi, std::numeric_limits<double>::infinity())).value.real();
}

double norm_check(const DecaySpectrum &spec, double t) {
  return std::norm(c0_weak(spec, t)) + photon_norm(spec, t);
}

QuadResult<double> integral_of_g(const DecaySpectrum &spec) {
  const double lo = spec.x_min(), hi = DecaySpectrum::x_max;
  auto f = [&](double x) -> cplx { return spec.g_of_x(x); };
  const auto r = panel_sum(f, peak_panels(lo, hi, std::numeric_limits<double>::infinity()));
  return {r.value.real(), r.error + truncation_bound(lo, hi)};
}

AmplitudeState amplitude_state(const DecaySpectrum &spec, double t) {
  AmplitudeState s;
  s.t = t;
  s.c0 = c0_exact(spec, t).value;
  s.D = [spec, t](double omega) { return photon_amplitude_D(spec, omega, t); };
  return s;
}

} // namespace lymanfield
