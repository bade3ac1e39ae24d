#include "lymanfield/coupling.hpp"

#include "lymanfield/quadrature.hpp"
#include "lymanfield/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lymanfield {

double CouplingFunction::rho(double k) const {
  if (k < 0.0)
    throw std::invalid_argument("rho: k must be nonnegative");
  if (k == 0.0)
    return 0.0;
  const auto &a = atom_;
  const double q = k / a.K;
  const double one_q2 = 1.0 + q * q;
  const double pref = std::pow(2.0 / 3.0, 3.5) *
                      std::sqrt(std::pow(a.alpha, 5) / std::numbers::pi) * a.m * a.c * a.c;
  return pref * q / std::sqrt(k) / (one_q2 * one_q2);
}

double CouplingFunction::rho(double k, int J, int M) const {
  if (J != 1 || M != atom_.m_e)
    return 0.0;
  return rho(k);
}

double CouplingFunction::rho_tilde(double omega) const {
  if (omega < 0.0)
    throw std::invalid_argument("rho_tilde: omega must be nonnegative");
  const auto &a = atom_;
  return std::sqrt(2.0 / (a.c * a.hbar * a.hbar)) * rho(omega / a.c);
}

double gamma_of_omega(const AtomParams &atom, double omega) {
  const double rt = CouplingFunction(atom).rho_tilde(omega);
  return 2.0 * std::numbers::pi * rt * rt;
}

namespace {

// grad phi_e in units r_B = 1 (so phi_e carries r_B^{-3/2} and grad a further r_B^{-1}).
ComplexVector3 grad_excited(int m_e, double x, double y, double z) {
  const double r = std::sqrt(x * x + y * y + z * z);
  const double decay = std::exp(-0.5 * r);
  ComplexVector3 g;
  if (m_e == 0) {
    const double n0 = 1.0 / (4.0 * std::sqrt(2.0 * std::numbers::pi));
    const double s = z / (2.0 * r);
    g[0] = -s * x;
    g[1] = -s * y;
    g[2] = 1.0 - s * z;
    return (n0 * decay) * g;
  }
  const double n1 = 1.0 / (8.0 * std::sqrt(std::numbers::pi));
  const double sgn = m_e > 0 ? 1.0 : -1.0;
  const cplx w(x, sgn * y); // x +- i y
  const cplx s = w / (2.0 * r);
  g[0] = 1.0 - s * x;
  g[1] = cplx(0.0, sgn) - s * y;
  g[2] = -s * z;
  return (-sgn * n1 * decay) * g;
}

// |<g| psi* . grad |e>| with r_B = 1, using `panels` GL15 panels on [0, 40].
cplx overlap_integral(int m_e, double k_scaled, int lambda, int M, int panels) {
  constexpr double r_max = 40.0;
  constexpr int n_phi = 8;
  const auto &ux = boost::math::quadrature::gauss<double, 20>::abscissa();
  const auto &uw = boost::math::quadrature::gauss<double, 20>::weights();

  auto angular = [&](double r) {
    cplx sum = 0.0;
    for (std::size_t i = 0; i < ux.size(); ++i) {
      for (int sgn : {-1, 1}) {
        if (ux[i] == 0.0 && sgn < 0)
          continue; // a centre node (odd orders only) appears once
        const double u = sgn * ux[i];
        const double theta = std::acos(u);
        const double st = std::sqrt(1.0 - u * u);
        for (int j = 0; j < n_phi; ++j) {
          const double phi = 2.0 * std::numbers::pi * j / n_phi;
          const double x = r * st * std::cos(phi), y = r * st * std::sin(phi), z = r * u;
          const ComplexVector3 psi = helicity_mode(k_scaled, M, lambda, r, {theta, phi});
          sum += uw[i] * hdot(psi, grad_excited(m_e, x, y, z));
        }
      }
    }
    const double ground = std::exp(-r) / std::sqrt(std::numbers::pi);
    return sum * (2.0 * std::numbers::pi / n_phi) * ground * r * r;
  };

  cplx total = 0.0;
  const double h = r_max / panels;
  for (int p = 0; p < panels; ++p)
    total += gauss_legendre15(angular, p * h, (p + 1) * h);
  return total;
}

} // namespace

OverlapResult coupling_overlap_oracle(const AtomParams &atom, double k, int lambda, int M) {
  if (!(k > 0.0))
    throw std::invalid_argument("coupling_overlap_oracle: k must be positive");
  if (lambda != 1 && lambda != -1)
    throw std::invalid_argument("coupling_overlap_oracle: lambda must be +1 or -1");
  const double ks = k * atom.r_B;
  const cplx fine = overlap_integral(atom.m_e, ks, lambda, M, 80);
  const cplx coarse = overlap_integral(atom.m_e, ks, lambda, M, 40);

  // -(e/m) p.A with p = -i hbar grad and A = sqrt(hbar/(2 eps0 omega)) psi.
  const double e = atom.elementary_charge();
  const double weight = std::sqrt(atom.hbar / (2.0 * atom.eps0 * atom.c * k));
  const double scale = (e * atom.hbar / atom.m) * weight / (atom.r_B * atom.r_B);

  const double mag = scale * std::abs(fine);
  const double err = scale * std::abs(fine - coarse);
  const double floor = scale * 1e-12;
  if (err > 1e-8 * mag + floor)
    throw QuadratureError("coupling_overlap_oracle: radial refinement did not converge", mag,
                          err);
  return {mag, err};
}

} // namespace lymanfield
