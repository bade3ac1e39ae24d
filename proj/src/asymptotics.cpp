#include "lymanfield/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lymanfield {

namespace {
constexpr double pi = std::numbers::pi;
const cplx I1{0.0, 1.0};

cplx D0(const DimensionlessParams &d) { return {d.A, d.B}; }

// h(q) = R0 (1+q^2)^2: derivatives n = 0, 1, 2 at q = 0
std::array<cplx, 3> h_derivatives(Branch b, const DimensionlessParams &d) {
  const cplx D = D0(d), D2 = D * D, D3 = D2 * D;
  const double p = d.p;
  if (b == Branch::Plus)
    return {1.0 / D, -I1 * p / D + I1 / D2, -p * p / D + 2.0 * p / D2 - 2.0 / D3};
  const cplx E = d.decay_factor();
  return {-E / D, -I1 * E / D2, 2.0 * E / D3};
}
} // namespace

EndpointData R_endpoint_data(int order, Branch branch, const DimensionlessParams &d) {
  if (!(d.A > 0.0))
    throw std::invalid_argument("R_endpoint_data: need A > 0");
  const auto h = h_derivatives(branch, d);
  EndpointData out;
  if (order == 0) {
    // (1+q^2)^{-2} = 1 - 2q^2 + ...
    out.derivatives = {h[0], h[1], h[2] - 4.0 * h[0]};
    out.parity = Parity::Sine;
  } else if (order == 1) {
    out.derivatives = {0.0, h[0], 2.0 * h[1]};
    out.parity = Parity::Cosine;
  } else {
    throw std::invalid_argument("R_endpoint_data: order must be 0 or 1");
  }
  return out;
}

cplx R1_second_derivative_quoted(Branch branch, const DimensionlessParams &d) {
  return h_derivatives(branch, d)[1];
}

cplx T_func(const DimensionlessParams &d) {
  return 2.0 * (1.0 - d.decay_factor()) / D0(d);
}

cplx T_from_endpoints(const DimensionlessParams &d) {
  // I_1 = r'^-2 int R0 sin - r'^-1 int R1 cos; read off the r'^-3 coefficient
  cplx T = 0.0;
  for (Branch b : {Branch::Plus, Branch::Minus}) {
    const auto s = ibp_asymptotic(R_endpoint_data(0, b, d), 1.0);
    const auto c = ibp_asymptotic(R_endpoint_data(1, b, d), 1.0);
    if (s.power != -1 || c.power != -2)
      throw std::logic_error("T_from_endpoints: unexpected leading order");
    T += s.value - c.value;
  }
  return T;
}

cplx T_func_quoted(const DimensionlessParams &d) {
  const cplx D = D0(d), one_minus = 1.0 - d.decay_factor();
  return (one_minus - 2.0 * I1 * d.p + I1 * one_minus / D) / D;
}

bool is_far_field(const DimensionlessParams &d) {
  return d.r_prime >= 20.0 * std::max(1.0, d.p);
}

AsymptoticPrediction F1_asymptotic_scaled(const DimensionlessParams &d, int lambda) {
  if (!(d.r_prime > 0.0))
    throw std::invalid_argument("F1_asymptotic: need r' > 0");
  const double r3 = d.r_prime * d.r_prime * d.r_prime;
  const cplx v = -I1 * double(lambda) * std::pow(2.0 / 3.0, 2.5) * T_func(d) / r3;
  return {v, -3, is_far_field(d)};
}

AsymptoticPrediction F1_asymptotic(double r, double t, const DecaySpectrum &spec, int lambda) {
  if (spec.preset() != Preset::Hydrogen)
    throw std::invalid_argument("F1_asymptotic: SI form needs the hydrogen preset");
  if (!(r > 0.0))
    throw std::invalid_argument("F1_asymptotic: need r > 0");
  const AtomParams &a = spec.atom();
  const auto d = spec.dimensionless(t, r);
  const double pref = std::pow(2.0 / 3.0, 5.5) * std::sqrt(std::pow(a.alpha, 5) / a.c) * a.m *
                      a.c * a.c * a.r_B * a.r_B / (pi * a.hbar);
  return {-I1 * double(lambda) * pref * T_func(d) / (r * r * r), -3, is_far_field(d)};
}

AsymptoticPrediction F0_asymptotic_scaled(const DimensionlessParams &d) {
  const cplx D = D0(d), E = d.decay_factor();
  const cplx dK = I1 * (1.0 - E) / (D * D) - I1 * d.p / D;
  const double r4 = std::pow(d.r_prime, 4);
  return {std::pow(2.0 / 3.0, 3) * (-2.0 * dK) / r4, -4, is_far_field(d)};
}

double gamma_angular(int m_e, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  switch (std::abs(m_e)) {
  case 0:
    return s * s;
  case 1:
    return 0.25 * (1.0 + c * c);
  default:
    throw std::invalid_argument("gamma_angular: m_e must be -1, 0 or 1");
  }
}

double dipole_weight(int m_e, double theta) {
  const double g = gamma_angular(m_e, theta);
  return m_e == 0 ? g : 2.0 * g;
}

AsymptoticPrediction energy_density_asymptotic(double r, double theta, double t, int m_e,
                                               const DecaySpectrum &spec) {
  if (spec.preset() != Preset::Hydrogen)
    throw std::invalid_argument("energy_density_asymptotic: SI form needs the hydrogen preset");
  const AtomParams &a = spec.atom();
  const auto d = spec.dimensionless(t, r);
  const double pref = std::pow(2.0 / 3.0, 10) * a.m * a.m * a.c * a.c * a.c *
                      std::pow(a.r_B, 4) * std::pow(a.alpha, 5) / (2.0 * pi * pi * pi * a.hbar);
  const double T2 = std::norm(T_func(d));
  return {pref * dipole_weight(m_e, theta) * T2 / std::pow(r, 6), -6, is_far_field(d)};
}

AsymptoticPrediction energy_density_asymptotic_scaled(const DimensionlessParams &d,
                                                      double theta, int m_e) {
  const auto F1 = F1_asymptotic_scaled(d, 1);
  const double v = 2.0 * std::norm(F1.value) * 3.0 / (8.0 * pi) * dipole_weight(m_e, theta);
  return {v, -6, F1.far_field};
}

PowerLawFit fit_power_law(const std::vector<double> &x, const std::vector<double> &y,
                          const std::vector<double> &err) {
  if (x.size() != y.size() || (!err.empty() && err.size() != y.size()))
    throw std::invalid_argument("fit_power_law: size mismatch");
  std::vector<double> lx, ly;
  std::size_t rejected = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = err.empty() ? 0.0 : err[i];
    if (!(x[i] > 0.0) || !(y[i] > 0.0) || !(e <= 0.01 * y[i])) {
      ++rejected;
      continue;
    }
    lx.push_back(std::log(x[i]));
    ly.push_back(std::log(y[i]));
  }
  const std::size_t n = lx.size();
  if (n < 8)
    throw std::invalid_argument("fit_power_law: fewer than 8 usable points");
  const auto [lo, hi] = std::minmax_element(lx.begin(), lx.end());
  if (*hi - *lo < 2.0 * std::log(10.0) * (1.0 - 1e-12))
    throw std::invalid_argument("fit_power_law: usable points span less than 2 decades");

  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= double(n);
  my /= double(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  const double slope = sxy / sxx;
  const double icpt = my - slope * mx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double res = ly[i] - icpt - slope * lx[i];
    ssr += res * res;
  }
  const double se = std::sqrt(ssr / double(n - 2) / sxx);
  return {slope, se, icpt, n, rejected};
}

PowerLawFit fit_power_law(const FieldScan &scan) {
  std::vector<double> x, y, e;
  for (const auto &p : scan.points) {
    if (!p.ok)
      continue;
    x.push_back(p.point.r);
    y.push_back(p.density);
    e.push_back(p.error_estimate);
  }
  auto fit = fit_power_law(x, y, e);
  fit.rejected += scan.points.size() - x.size();
  return fit;
}

} // namespace lymanfield
