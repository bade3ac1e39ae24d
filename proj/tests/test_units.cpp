#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lymanfield/units.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <numbers>

using namespace lymanfield;
constexpr double pi = std::numbers::pi;

TEST_CASE("derived atomic constants") {
  for (int m : {-1, 0, 1}) {
    const auto a = make_atom_params(m);
    CHECK(a.r_B == a.hbar / (a.alpha * a.m * a.c));
    CHECK(a.K == 3.0 / (2.0 * a.r_B));
    CHECK(a.E_g == 0.0);
    CHECK(a.m_e == m);
    CHECK(std::abs(a.omega_a / a.cK() / (a.alpha / 4.0) - 1.0) < 1e-14);
  }
  CHECK(make_atom_params(0).omega_a / make_atom_params(0).cK() == doctest::Approx(1.824e-3).epsilon(1e-3));
  CHECK_THROWS_AS(make_atom_params(2), std::invalid_argument);
  CHECK_THROWS_AS(make_atom_params(-2), std::invalid_argument);
}

TEST_CASE("Bohr energy difference gives the transition frequency") {
  const auto a = make_atom_params(0);
  // E_n = -alpha^2 m c^2 / (2 n^2)
  const double e1 = -a.alpha * a.alpha * a.m * a.c * a.c / 2.0;
  const double e2 = e1 / 4.0;
  CHECK(std::abs((e2 - e1) / a.hbar / a.omega_a - 1.0) < 1e-14);
}

TEST_CASE("ground state is normalized") {
  const auto a = make_atom_params(0);
  CHECK(ground_wavefunction(a, 0.0) == doctest::Approx(1.0 / std::sqrt(pi * std::pow(a.r_B, 3))));
  CHECK(ground_wavefunction(a, 200.0 * a.r_B) / ground_wavefunction(a, 0.0) < 1e-80);
  boost::math::quadrature::exp_sinh<double> es;
  const double norm = es.integrate([&](double x) {
    const double r = x * a.r_B;
    const double g = ground_wavefunction(a, r);
    return 4.0 * pi * r * r * g * g * a.r_B;
  });
  CHECK(std::abs(norm - 1.0) < 1e-9);
}

TEST_CASE("excited states are normalized") {
  boost::math::quadrature::exp_sinh<double> es;
  using GL = boost::math::quadrature::gauss<double, 20>;
  for (int m : {-1, 0, 1}) {
    const auto a = make_atom_params(m);
    // separable: radial profile at a fixed direction times the angular integral
    auto ang = [&](double th, double ph) {
      const auto v = excited_wavefunction(a, a.r_B, th, ph, m);
      return std::norm(v) / std::pow(std::exp(-0.5), 2);
    };
    double angular = 0.0;
    const int nphi = 16;
    for (int j = 0; j < nphi; ++j) {
      const double ph = 2.0 * pi * j / nphi;
      angular += GL::integrate([&](double u) { return ang(std::acos(u), ph); }, -1.0, 1.0) *
                 (2.0 * pi / nphi);
    }
    const double radial = es.integrate([&](double x) {
      return x * x * std::pow(x * std::exp(-0.5 * x), 2);
    });
    // radial factor: int x^4 e^{-x} dx = 24 in units of r_B^3
    CHECK(radial == doctest::Approx(24.0).epsilon(1e-12));
    CHECK(std::abs(angular * radial * std::pow(a.r_B, 3) - 1.0) < 1e-9);
  }
}

TEST_CASE("excited-state nodes") {
  const auto a0 = make_atom_params(0), a1 = make_atom_params(1);
  for (double r : {0.3, 1.0, 4.0})
    for (double ph : {0.0, 1.3, 4.0}) {
      CHECK(std::abs(excited_wavefunction(a0, r * a0.r_B, pi / 2, ph, 0)) <
            1e-16 * std::abs(excited_wavefunction(a0, r * a0.r_B, 0.0, ph, 0)));
      CHECK(excited_wavefunction(a1, r * a1.r_B, 0.0, ph, 1) == std::complex<double>(0.0));
    }
  CHECK_THROWS_AS(excited_wavefunction(a0, a0.r_B, 0.1, 0.1, 3), std::invalid_argument);
}

TEST_CASE("dimensionless map") {
  const auto a = make_atom_params(0);
  const double gam = 2.0 * a.cK() * 0.05;
  const auto d0 = to_dimensionless(a, gam, -1e9, 0.0, 1e-9);
  CHECK(d0.p == 0.0);
  CHECK(d0.A == doctest::Approx(0.05).epsilon(1e-15));
  CHECK(d0.A == gam / (2.0 * a.cK()));
  CHECK(d0.B == (a.omega_a - 1e9) / a.cK());

  const double G = 6.27e8, D = -2.7e10, t = 3.3e-9, r = 4.2e-7;
  const auto d = to_dimensionless(a, G, D, t, r);
  const auto back = to_physical(a, d);
  CHECK(std::abs(back.gamma_a / G - 1.0) < 1e-12);
  CHECK(std::abs(back.delta_a / D - 1.0) < 1e-12);
  CHECK(std::abs(back.t / t - 1.0) < 1e-12);
  CHECK(std::abs(back.r / r - 1.0) < 1e-12);
  CHECK_THROWS(to_dimensionless(a, -1.0, 0.0, 0.0, 1.0));
}

TEST_CASE("decay factor") {
  const DimensionlessParams d{0.05, 0.3, 5.0, 10.0};
  const auto E = d.decay_factor();
  CHECK(std::abs(E - std::exp(std::complex<double>(-0.25, -1.5))) < 1e-16);
}
