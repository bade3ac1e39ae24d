#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lymanfield/special_functions.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

using namespace lymanfield;
constexpr double pi = std::numbers::pi;

namespace {

// j_0..j_2 by Miller backward recurrence in long double, normalized with
// sum_n (2n+1) j_n(x)^2 = 1.
std::array<long double, 3> bessel_oracle(long double x) {
  const int start = static_cast<int>(x) + 60 + static_cast<int>(4.0 * std::cbrt(double(x)));
  long double jp1 = 0.0L, j = 1e-300L, sum = 0.0L;
  std::array<long double, 3> out{};
  for (int n = start; n >= 0; --n) {
    if (n <= 2)
      out[n] = j;
    sum += (2.0L * n + 1.0L) * j * j;
    const long double jm1 = (2.0L * n + 1.0L) / x * j - jp1;
    jp1 = j;
    j = jm1;
    if (std::abs(j) > 1e200L) { // rescale
      j *= 1e-200L;
      jp1 *= 1e-200L;
      sum *= 1e-400L;
      for (auto &o : out)
        o *= 1e-200L;
    }
  }
  const long double norm = 1.0L / std::sqrt(sum);
  for (auto &o : out)
    o *= norm;
  // fix the overall sign from j_0 ~ 1 at small x
  if (x < 1.0L && out[0] < 0)
    for (auto &o : out)
      o = -o;
  else if (x >= 1.0L && (out[0] > 0) != (std::sin(x) > 0))
    for (auto &o : out)
      o = -o;
  return out;
}

ComplexVector3 mode_at(double k, int M, int lam, const std::array<double, 3> &x) {
  const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  return helicity_mode(k, M, lam, r, {std::acos(x[2] / r), std::atan2(x[1], x[0])});
}

struct CurlDiv {
  ComplexVector3 curl;
  cplx div;
};

CurlDiv fd_curl_div(double k, int M, int lam, std::array<double, 3> x, double h) {
  std::array<std::array<cplx, 3>, 3> d{}; // d[i][j] = d_i psi_j
  for (int i = 0; i < 3; ++i) {
    auto xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    const auto fp = mode_at(k, M, lam, xp), fm = mode_at(k, M, lam, xm);
    for (int j = 0; j < 3; ++j)
      d[i][j] = (fp[j] - fm[j]) / (2.0 * h);
  }
  CurlDiv out;
  out.curl[0] = d[1][2] - d[2][1];
  out.curl[1] = d[2][0] - d[0][2];
  out.curl[2] = d[0][1] - d[1][0];
  out.div = d[0][0] + d[1][1] + d[2][2];
  return out;
}

double vnorm(const ComplexVector3 &v) { return std::sqrt(norm2(v)); }

} // namespace

TEST_CASE("spherical Bessel special values") {
  CHECK(spherical_bessel(0, 0.0) == 1.0);
  CHECK(spherical_bessel(1, 0.0) == 0.0);
  CHECK(spherical_bessel(2, 0.0) == 0.0);
  CHECK(std::abs(spherical_bessel(0, pi)) < 1e-16);
  // j_1(x)/x = 1/3 - x^2/30 + x^4/840 - ...
  for (double x : {1e-8, 1e-5, 1e-3, 1e-2}) {
    const double series = 1.0 / 3.0 - x * x / 30.0 + std::pow(x, 4) / 840.0;
    CHECK(spherical_bessel(1, x) / x == doctest::Approx(series).epsilon(1e-14));
  }
  CHECK_THROWS_AS(spherical_bessel(3, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(spherical_bessel(0, -1.0), std::invalid_argument);
}

TEST_CASE("spherical Bessel against backward recurrence") {
  double worst = 0.0, worst_x = 0.0;
  int worst_L = 0;
  const int n = 600;
  for (int i = 0; i <= n; ++i) {
    const double x = std::pow(10.0, -8.0 + 11.0 * i / n);
    const auto ref = bessel_oracle(x);
    for (int L = 0; L < 3; ++L) {
      const double rel = std::abs(spherical_bessel(L, x) - double(ref[L])) / std::abs(double(ref[L]));
      if (rel > worst) {
        worst = rel;
        worst_x = x;
        worst_L = L;
      }
    }
  }
  INFO("worst relative error ", worst, " at L=", worst_L, ", x=", worst_x);
  CHECK(worst < 1e-13);
}

TEST_CASE("recurrence for j2") {
  for (double x : {0.5, 1.0, 3.7, 25.0, 400.0})
    CHECK(spherical_bessel(2, x) ==
          doctest::Approx(3.0 / x * spherical_bessel(1, x) - spherical_bessel(0, x)).epsilon(1e-12));
}

TEST_CASE("Clebsch-Gordan values") {
  CHECK(clebsch_gordan(1, 0, 1, 0, 2, 0) == doctest::Approx(std::sqrt(2.0 / 3.0)));
  CHECK(clebsch_gordan(1, 0, 1, 0, 0, 0) == doctest::Approx(-std::sqrt(1.0 / 3.0)));
  CHECK(clebsch_gordan(1, 1, 1, -1, 1, 0) == doctest::Approx(std::sqrt(0.5)));
  CHECK(clebsch_gordan(2, 1, 1, 0, 1, 1) == doctest::Approx(-std::sqrt(0.3)));
  CHECK(clebsch_gordan(1, 1, 1, 1, 1, 1) == 0.0);
}

TEST_CASE("spherical basis") {
  for (int s : {-1, 0, 1})
    for (int t : {-1, 0, 1})
      CHECK(std::abs(hdot(spherical_basis(s), spherical_basis(t)) - cplx(s == t)) < 1e-15);
  CHECK(std::abs(spherical_basis(1)[0] + 1.0 / std::sqrt(2.0)) < 1e-16);
}

TEST_CASE("dipole angular products") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> th(0.0, pi), ph(0.0, 2 * pi);
  for (int i = 0; i < 20; ++i) {
    const AngularPoint pt{th(rng), ph(rng)};
    const double s = std::sin(pt.theta), c = std::cos(pt.theta);
    CHECK(std::abs(norm2(vector_spherical_harmonic(1, 0, pt)) - 3.0 / (8 * pi) * s * s) < 1e-12);
    for (int m : {-1, 1})
      CHECK(std::abs(norm2(vector_spherical_harmonic(1, m, pt)) - 3.0 / (16 * pi) * (1 + c * c)) <
            1e-12);
  }
}

TEST_CASE("vector harmonics are orthonormal on the sphere") {
  using GL = boost::math::quadrature::gauss<double, 30>;
  const int nphi = 24;
  double worst = 0.0;
  for (int L = 0; L < 3; ++L)
    for (int M = -1; M <= 1; ++M)
      for (int L2 = 0; L2 < 3; ++L2)
        for (int M2 = -1; M2 <= 1; ++M2) {
          cplx sum = 0.0;
          for (int j = 0; j < nphi; ++j) {
            const double ph = 2 * pi * j / nphi;
            auto re = [&](double u) {
              const AngularPoint pt{std::acos(u), ph};
              return hdot(vector_spherical_harmonic(L, M, pt), vector_spherical_harmonic(L2, M2, pt))
                  .real();
            };
            auto im = [&](double u) {
              const AngularPoint pt{std::acos(u), ph};
              return hdot(vector_spherical_harmonic(L, M, pt), vector_spherical_harmonic(L2, M2, pt))
                  .imag();
            };
            sum += cplx(GL::integrate(re, -1.0, 1.0), GL::integrate(im, -1.0, 1.0)) *
                   (2 * pi / nphi);
          }
          worst = std::max(worst, std::abs(sum - cplx(L == L2 && M == M2)));
        }
  CHECK(worst < 1e-10);
  CHECK_THROWS(vector_spherical_harmonic(3, 0, {0.1, 0.2}));
  CHECK_THROWS(vector_spherical_harmonic(1, 2, {0.1, 0.2}));
}

TEST_CASE("helicity modes: curl eigenrelation and transversality at second order") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double k = 1.7;
  int second_order = 0, total = 0;
  for (int i = 0; i < 50; ++i) {
    std::array<double, 3> x{2.0 * u(rng), 2.0 * u(rng), 2.0 * u(rng)};
    if (std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]) < 0.3)
      x[2] += 1.0;
    const int M = i % 3 - 1, lam = (i % 2) ? 1 : -1;
    const auto psi = mode_at(k, M, lam, x);
    const double h = 2e-3;
    const auto a = fd_curl_div(k, M, lam, x, h), b = fd_curl_div(k, M, lam, x, h / 2);
    const double ea = vnorm(a.curl - double(lam) * k * psi);
    const double eb = vnorm(b.curl - double(lam) * k * psi);
    const double scale = vnorm(psi) * k;
    CHECK(eb < 1e-5 * scale);
    CHECK(std::abs(b.div) < 1e-5 * scale);
    ++total;
    const double ratio = ea / eb;
    // halving h should cut the error by 4; allow rounding near tiny errors
    if ((ratio > 3.5 && ratio < 4.5) || eb < 1e-10 * scale)
      ++second_order;
  }
  CHECK(second_order == total);
}

TEST_CASE("helicity flip changes only the L=1 part") {
  const double k = 0.9, r = 2.3;
  const AngularPoint pt{0.7, 1.9};
  for (int M = -1; M <= 1; ++M) {
    const auto p = helicity_mode(k, M, 1, r, pt), m = helicity_mode(k, M, -1, r, pt);
    // psi(+) - psi(-) = sqrt2 psi^1, psi^1 = sqrt(2/pi) k j_1(kr) Y^1
    const auto psi1 = std::sqrt(2.0 / pi) * k * spherical_bessel(1, k * r) *
                      vector_spherical_harmonic(1, M, pt);
    CHECK(vnorm(p - m - std::sqrt(2.0) * psi1) < 1e-14);
    const auto psi0 = std::sqrt(2.0 / pi) * k * spherical_bessel(0, k * r) *
                      vector_spherical_harmonic(0, M, pt);
    const auto psi2 = std::sqrt(2.0 / pi) * k * spherical_bessel(2, k * r) *
                      vector_spherical_harmonic(2, M, pt);
    const auto even = cplx(0, 1) * std::sqrt(2.0) *
                      (std::sqrt(2.0 / 3.0) * psi0 - std::sqrt(1.0 / 3.0) * psi2);
    CHECK(vnorm(p + m - even) < 1e-14);
  }
  CHECK_THROWS(helicity_mode(-1.0, 0, 1, 1.0, pt));
}

TEST_CASE("expm1_over") {
  for (cplx z : {cplx(1e-12, 0), cplx(0, 1e-9), cplx(-3e-5, 2e-5), cplx(0.3, -2.0), cplx(-20, 5)}) {
    // series oracle for small |z|, direct formula otherwise
    cplx ref;
    if (std::abs(z) < 1e-3)
      ref = 1.0 + z / 2.0 + z * z / 6.0 + z * z * z / 24.0;
    else
      ref = (std::exp(z) - 1.0) / z;
    CHECK(std::abs(expm1_over(z) - ref) < 1e-14 * std::abs(ref));
  }
  CHECK(expm1_over(0.0) == cplx(1.0));
}

TEST_CASE("spherical components") {
  const AngularPoint pt{0.8, 2.2};
  ComplexVector3 er;
  er[0] = std::sin(pt.theta) * std::cos(pt.phi);
  er[1] = std::sin(pt.theta) * std::sin(pt.phi);
  er[2] = std::cos(pt.theta);
  const auto s = to_spherical_components(er, pt);
  CHECK(std::abs(s[0] - 1.0) < 1e-15);
  CHECK(std::abs(s[1]) < 1e-15);
  CHECK(std::abs(s[2]) < 1e-15);
}
