#include "lymanfield/field.hpp"

#include "lymanfield/oscillatory.hpp"
#include "lymanfield/quadrature.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace lymanfield {

namespace {
constexpr double pi = std::numbers::pi;
const cplx I1{0.0, 1.0};

using Vec3 = std::array<cplx, 3>;

DimensionlessParams scaled_params(const FieldPoint &pt, const DecaySpectrum &spec) {
  if (pt.mode == FieldMode::Physical) {
    if (spec.preset() != Preset::Hydrogen)
      throw std::invalid_argument("physical field mode needs the hydrogen preset");
    return spec.dimensionless(pt.t, pt.r);
  }
  if (pt.t < 0.0 || !(pt.r > 0.0))
    throw std::invalid_argument("field point: need p >= 0 and r' > 0");
  return {0.5 * spec.gamma_a() / spec.unit(), spec.omega_shifted() / spec.unit(), pt.t, pt.r};
}

double unit_factor(FieldMode mode, const DecaySpectrum &spec) {
  return mode == FieldMode::Physical ? field_unit(spec.atom()) : 1.0;
}

double hbar_factor(FieldMode mode, const DecaySpectrum &spec) {
  return mode == FieldMode::Physical ? spec.atom().hbar : 1.0;
}

FLTriple fl_from_integrals(const RadialIntegrals &I, int lambda, double scale) {
  if (lambda != 1 && lambda != -1)
    throw std::invalid_argument("helicity must be +1 or -1");
  const double c0 = std::pow(2.0 / 3.0, 3);
  const double c1 = std::pow(2.0 / 3.0, 2.5);
  const double c2 = c0 / std::sqrt(2.0);
  FLTriple out;
  out.lambda = lambda;
  out.F[0] = scale * c0 * I.I[0];
  out.F[1] = scale * c1 * (-I1 * double(lambda)) * I.I[1];
  out.F[2] = -scale * c2 * I.I[2];
  out.error = {scale * c0 * I.error[0], scale * c1 * I.error[1], scale * c2 * I.error[2]};
  return out;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// j_0, j_1, j_2 at x = q r'. Above the series region the trigonometric
// factors use the rounding-compensated product, since x reaches 1e5 and more.
std::array<double, 3> bessel_triplet(double q, double r, bool j2_recurrence) {
  const double x = q * r;
  std::array<double, 3> j;
  if (x < 1.0) {
    for (int L = 0; L < 3; ++L)
      j[L] = spherical_bessel(L, x);
  } else {
    const cplx ph = accurate_phase(r, q);
    const double s = ph.imag(), c = ph.real();
    j[0] = s / x;
    j[1] = (j[0] - c) / x;
    j[2] = ((3.0 / (x * x) - 1.0) * s - 3.0 * c / x) / x;
  }
  if (j2_recurrence)
    j[2] = 3.0 / x * j[1] - j[0];
  return j;
}

// Composite GL15 with per-component error: |halved - whole| plus a rounding
// floor proportional to the summed panel magnitudes.
template <class F>
std::pair<Vec3, std::array<double, 3>> window_sum(F &&f, const std::vector<double> &edges,
                                                  bool parallel) {
  const long n = static_cast<long>(edges.size()) - 1;
  std::vector<Vec3> fine(n), diff(n);
  auto one = [&](long i) {
    const double a = edges[i], b = edges[i + 1], m = 0.5 * (a + b);
    const Vec3 whole = gauss_legendre15(f, a, b);
    fine[i] = gauss_legendre15(f, a, m) + gauss_legendre15(f, m, b);
    diff[i] = fine[i] - whole;
  };
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i)
      one(i);
  } else {
    for (long i = 0; i < n; ++i)
      one(i);
  }
  Vec3 total{};
  std::array<double, 3> err{}, mag{};
  for (long i = 0; i < n; ++i)
    for (int c = 0; c < 3; ++c) {
      total[c] += fine[i][c];
      err[c] += std::abs(diff[i][c]);
      mag[c] += std::abs(fine[i][c]);
    }
  for (int c = 0; c < 3; ++c)
    err[c] += 50.0 * std::numeric_limits<double>::epsilon() * mag[c];
  return {total, err};
}

FieldScan scan_header(FieldMode mode, const DecaySpectrum &spec, const FieldOptions &opt) {
  FieldScan s;
  s.mode = mode;
  s.m_e = spec.atom().m_e;
  s.A = 0.5 * spec.gamma_a() / spec.unit();
  s.B = spec.omega_shifted() / spec.unit();
  s.gamma_a = spec.gamma_a();
  s.delta_a = spec.delta_a();
  s.rel_tol = opt.rel_tol;
  s.timestamp = utc_timestamp();
  return s;
}
} // namespace

cplx field_kernel(double q, double A, double B, double p) {
  if (p == 0.0)
    return 0.0;
  const cplx q0(B, -A);
  const cplx dq = q - q0;
  if (std::abs(dq) * p < 1.0)
    return p * std::exp(-I1 * q0 * p) * expm1_over(-I1 * dq * p);
  return (std::polar(1.0, -q * p) - std::exp(-cplx(A, B) * p)) / cplx(A, B - q);
}

RadialIntegrals radial_integrals(const DimensionlessParams &d, const FieldOptions &opt) {
  const double A = d.A, B = d.B, p = d.p, r = d.r_prime;
  if (!(A > 0.0) || !(r > 0.0) || p < 0.0)
    throw std::invalid_argument("radial_integrals: need A > 0, r' > 0, p >= 0");
  if (r + p > kMaxPhase)
    throw std::invalid_argument("radial_integrals: r' + p = " + std::to_string(r + p) +
                                " exceeds " + std::to_string(kMaxPhase) +
                                "; the window would need ~(r' + p) quadrature panels");
  RadialIntegrals out;
  if (p == 0.0)
    return out;

  // window [0, q_w]: the entire kernel with the Bessel functions as they are
  const double q_w = std::max(B + 1.0, 20.0 / r);
  const double width = std::min(pi / (r + p + 1.0), 0.25);
  const long n_win = static_cast<long>(std::ceil(q_w / width));
  std::vector<double> edges(n_win + 1);
  for (long i = 0; i <= n_win; ++i)
    edges[i] = q_w * static_cast<double>(i) / static_cast<double>(n_win);
  const bool recur = opt.j2_via_recurrence;
  auto window_f = [&](double q) {
    const double q2 = q * q, s = 1.0 + q2;
    const cplx h = field_kernel(q, A, B, p) * (q2 / (s * s));
    const auto j = bessel_triplet(q, r, recur);
    return Vec3{h * j[0], h * j[1], h * j[2]};
  };
  const auto [win, win_err] = window_sum(window_f, edges, opt.parallel);

  // tail [q_w, inf): base functions u/q, u, q u with u = 1/(D(q)(1+q^2)^2)
  auto tail_f = [&](double q) {
    const double s = 1.0 + q * q;
    const cplx u = 1.0 / (cplx(A, B - q) * (s * s));
    return Vec3{u / q, u, q * u};
  };
  FourierOptions fo;
  fo.lower = q_w;
  fo.structure_end = q_w;
  fo.abs_tol = 0.0;
  fo.rel_tol = opt.rel_tol;
  fo.parallel = opt.parallel;
  const cplx E = d.decay_factor();
  std::array<Vec3, 2> J; // J(+r), J(-r)
  std::array<double, 3> je{}; // error of the sine/cosine combinations per base function
  for (int k = 0; k < 2; ++k) {
    const double w = k == 0 ? r : -r;
    auto tail_at = [&](double freq) {
      try {
        return fourier_integral_n<3>(tail_f, freq, fo);
      } catch (const OscillatoryError &e) {
        // the three base functions feed L = 2 (u/q), L = 1, 2 (u) and all L (q u)
        throw OscillatoryError("radial_integrals: tail for L = 0, 1, 2 did not converge at "
                               "effective frequency " + std::to_string(freq) + " (r' = " +
                                   std::to_string(r) + ", p = " + std::to_string(p) + ")",
                               e.partial_value, e.error_estimate);
      }
    };
    const auto plus = tail_at(w - p);
    const auto minus = tail_at(w);
    for (int n = 0; n < 3; ++n) {
      J[k][n] = plus.value[n] - E * minus.value[n];
      je[n] += 0.5 * (plus.component_error[n] + std::abs(E) * minus.component_error[n]);
    }
  }
  Vec3 sn, cs;
  for (int n = 0; n < 3; ++n) {
    sn[n] = (J[0][n] - J[1][n]) / (2.0 * I1);
    cs[n] = 0.5 * (J[0][n] + J[1][n]);
  }
  const double r2 = r * r, r3 = r2 * r;
  // q^2 j0 = q sin/r', q^2 j1 = sin/r'^2 - q cos/r',
  // q^2 j2 = 3 sin/(q r'^3) - 3 cos/r'^2 - q sin/r'
  const Vec3 tail{sn[2] / r, sn[1] / r2 - cs[2] / r,
                  3.0 * sn[0] / r3 - 3.0 * cs[1] / r2 - sn[2] / r};
  const std::array<double, 3> tail_err{je[2] / r, je[1] / r2 + je[2] / r,
                                       3.0 * je[0] / r3 + 3.0 * je[1] / r2 + je[2] / r};
  for (int L = 0; L < 3; ++L) {
    out.I[L] = win[L] + tail[L];
    out.error[L] = win_err[L] + tail_err[L];
  }
  return out;
}

FLTriple compute_FL_scaled(const DimensionlessParams &d, int lambda, const FieldOptions &opt) {
  return fl_from_integrals(radial_integrals(d, opt), lambda, 1.0);
}

double field_unit(const AtomParams &a) {
  return std::sqrt(std::pow(a.alpha, 5) / a.c) * a.m * a.c * a.c / (pi * a.hbar * a.r_B);
}

FLTriple compute_FL(const FieldPoint &pt, const DecaySpectrum &spec, int lambda,
                    const FieldOptions &opt) {
  const auto d = scaled_params(pt, spec);
  FLTriple f = fl_from_integrals(radial_integrals(d, opt), lambda, unit_factor(pt.mode, spec));
  f.mode = pt.mode;
  return f;
}

cplx d_k_amplitude(double k, double t, const DecaySpectrum &spec) {
  if (spec.preset() != Preset::Hydrogen)
    throw std::invalid_argument("d_k_amplitude: needs the hydrogen preset");
  if (!(k > 0.0))
    throw std::invalid_argument("d_k_amplitude: k must be positive");
  const double c = spec.atom().c;
  return std::sqrt(c) * photon_amplitude_D(spec, c * k, t);
}

ComplexVector3 helicity_field(const FLTriple &F, int m_e, AngularPoint pt) {
  ComplexVector3 v;
  for (int L = 0; L < 3; ++L)
    v += F.F[L] * vector_spherical_harmonic(L, m_e, pt);
  return v;
}

ComplexVector3 helicity_field(const FieldPoint &pt, const DecaySpectrum &spec, int lambda,
                              const FieldOptions &opt) {
  return helicity_field(compute_FL(pt, spec, lambda, opt), spec.atom().m_e,
                        {pt.theta, pt.phi});
}

DensityValue energy_density_from(const RadialIntegrals &I, double scale, double hbar, int m_e,
                                 AngularPoint ang) {
  std::array<double, 3> ynorm;
  for (int L = 0; L < 3; ++L)
    ynorm[L] = std::sqrt(norm2(vector_spherical_harmonic(L, m_e, ang)));
  double value = 0.0, err = 0.0;
  for (int lambda : {1, -1}) {
    const FLTriple F = fl_from_integrals(I, lambda, scale);
    const ComplexVector3 v = helicity_field(F, m_e, ang);
    const double mag2 = norm2(v);
    double dv = 0.0;
    for (int L = 0; L < 3; ++L)
      dv += F.error[L] * ynorm[L];
    value += mag2;
    err += 2.0 * std::sqrt(mag2) * dv + dv * dv;
  }
  return {hbar * value, hbar * err};
}

DensityValue energy_density(const FieldPoint &pt, const DecaySpectrum &spec,
                            const FieldOptions &opt) {
  const auto d = scaled_params(pt, spec);
  return energy_density_from(radial_integrals(d, opt), unit_factor(pt.mode, spec),
                             hbar_factor(pt.mode, spec), spec.atom().m_e, {pt.theta, pt.phi});
}

bool FieldScan::all_ok() const {
  for (const auto &p : points)
    if (!p.ok)
      return false;
  return true;
}

FieldScan radial_scan(const std::vector<double> &r_values, double theta, double phi, double t,
                      FieldMode mode, const DecaySpectrum &spec, const FieldOptions &opt) {
  if (r_values.empty())
    throw std::invalid_argument("radial_scan: empty grid");
  FieldScan scan = scan_header(mode, spec, opt);
  scan.points.resize(r_values.size());
  FieldOptions inner = opt;
  inner.parallel = false; // parallelism lives at the point level here
  const long n = static_cast<long>(r_values.size());
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
  for (long i = 0; i < n; ++i) {
    ScanPoint &sp = scan.points[i];
    sp.point = {r_values[i], theta, phi, t, mode};
    try {
      const auto dv = energy_density(sp.point, spec, inner);
      sp.density = dv.value;
      sp.error_estimate = dv.error_estimate;
      sp.ok = true;
    } catch (const std::exception &e) {
      sp.failure = e.what();
    }
  }
  return scan;
}

FieldScan angular_scan(const std::vector<double> &thetas, double r, double phi, double t,
                       FieldMode mode, const DecaySpectrum &spec, const FieldOptions &opt) {
  if (thetas.empty())
    throw std::invalid_argument("angular_scan: empty grid");
  FieldScan scan = scan_header(mode, spec, opt);
  scan.points.resize(thetas.size());
  RadialIntegrals I;
  std::string failure;
  try {
    I = radial_integrals(scaled_params({r, 0.0, phi, t, mode}, spec), opt);
  } catch (const std::exception &e) {
    failure = e.what();
  }
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    ScanPoint &sp = scan.points[i];
    sp.point = {r, thetas[i], phi, t, mode};
    if (!failure.empty()) {
      sp.failure = failure;
      continue;
    }
    const auto dv = energy_density_from(I, unit_factor(mode, spec), hbar_factor(mode, spec),
                                        spec.atom().m_e, {thetas[i], phi});
    sp.density = dv.value;
    sp.error_estimate = dv.error_estimate;
    sp.ok = true;
  }
  return scan;
}

} // namespace lymanfield
