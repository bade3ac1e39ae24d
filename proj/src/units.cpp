#include "lymanfield/units.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace lymanfield {

namespace {
void require_magnetic_number(int m_e) {
  if (m_e < -1 || m_e > 1)
    throw std::invalid_argument("m_e must be -1, 0 or +1 (got " +
                                std::to_string(m_e) + ")");
}
} // namespace

double AtomParams::elementary_charge() const {
  return std::sqrt(4.0 * std::numbers::pi * eps0 * alpha * hbar * c);
}

AtomParams make_atom_params(int m_e) {
  require_magnetic_number(m_e);
  AtomParams a{};
  a.alpha = codata::alpha;
  a.m = codata::electron_mass;
  a.c = codata::light_speed;
  a.hbar = codata::hbar;
  a.eps0 = codata::eps0;
  a.r_B = a.hbar / (a.alpha * a.m * a.c);
  a.K = 3.0 / (2.0 * a.r_B);
  // E_2 - E_1 = (3/8) alpha^2 m c^2
  a.omega_a = 3.0 * a.alpha * a.alpha * a.m * a.c * a.c / (8.0 * a.hbar);
  a.E_g = 0.0;
  a.m_e = m_e;
  return a;
}

std::complex<double> DimensionlessParams::decay_factor() const {
  return std::exp(-std::complex<double>(A, B) * p);
}

DimensionlessParams to_dimensionless(const AtomParams &atom, double gamma_a,
                                     double delta_a, double t, double r) {
  if (!(gamma_a > 0.0))
    throw std::invalid_argument("gamma_a must be positive");
  if (t < 0.0)
    throw std::invalid_argument("time must be nonnegative");
  if (!(r > 0.0))
    throw std::invalid_argument("radius must be positive");
  const double cK = atom.cK();
  const double B = (atom.omega_a + delta_a) / cK;
  if (!(B > 0.0))
    throw std::invalid_argument("shifted transition frequency must be positive");
  return {gamma_a / (2.0 * cK), B, cK * t, atom.K * r};
}

PhysicalPoint to_physical(const AtomParams &atom, const DimensionlessParams &d) {
  const double cK = atom.cK();
  return {2.0 * cK * d.A, cK * d.B - atom.omega_a, d.p / cK, d.r_prime / atom.K};
}

double ground_wavefunction(const AtomParams &atom, double r) {
  const double rb = atom.r_B;
  return std::exp(-r / rb) / std::sqrt(std::numbers::pi * rb * rb * rb);
}

std::complex<double> excited_wavefunction(const AtomParams &atom, double r,
                                          double theta, double phi, int m_e) {
  require_magnetic_number(m_e);
  const double rb = atom.r_B;
  const double rb3 = rb * rb * rb;
  const double radial = (r / rb) * std::exp(-r / (2.0 * rb));
  std::complex<double> beta;
  if (m_e == 0) {
    beta = std::cos(theta) / (4.0 * std::sqrt(2.0 * std::numbers::pi * rb3));
  } else {
    const double sign = m_e > 0 ? -1.0 : 1.0;
    beta = sign * std::sin(theta) / (8.0 * std::sqrt(std::numbers::pi * rb3)) *
           std::polar(1.0, m_e * phi);
  }
  return beta * radial;
}

} // namespace lymanfield
