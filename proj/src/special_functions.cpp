#include "lymanfield/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lymanfield {

namespace {
constexpr double pi = std::numbers::pi;
const cplx I{0.0, 1.0};

// j_L(x) = x^L sum_n (-x^2/2)^n / (n! (2n+2L+1)!!)
double bessel_series(int L, double x) {
  double dfact = 1.0; // (2L+1)!!
  for (int k = 3; k <= 2 * L + 1; k += 2)
    dfact *= k;
  const double y = -0.5 * x * x;
  double term = 1.0 / dfact;
  double sum = term;
  for (int n = 1; n < 14; ++n) {
    term *= y / (n * (2.0 * n + 2.0 * L + 1.0));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum))
      break;
  }
  return std::pow(x, L) * sum;
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k)
    f *= k;
  return f;
}
} // namespace

cplx hdot(const ComplexVector3 &a, const ComplexVector3 &b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1] + std::conj(a[2]) * b[2];
}

double norm2(const ComplexVector3 &a) {
  return std::norm(a[0]) + std::norm(a[1]) + std::norm(a[2]);
}

ComplexVector3 to_spherical_components(const ComplexVector3 &v, AngularPoint pt) {
  const double st = std::sin(pt.theta), ct = std::cos(pt.theta);
  const double sp = std::sin(pt.phi), cp = std::cos(pt.phi);
  ComplexVector3 out;
  out[0] = st * cp * v[0] + st * sp * v[1] + ct * v[2];
  out[1] = ct * cp * v[0] + ct * sp * v[1] - st * v[2];
  out[2] = -sp * v[0] + cp * v[1];
  return out;
}

double spherical_bessel(int L, double x) {
  if (L < 0 || L > 2)
    throw std::invalid_argument("spherical_bessel: L must be 0, 1 or 2");
  if (x < 0.0)
    throw std::invalid_argument("spherical_bessel: x must be nonnegative");
  // j0 has no cancellation; j1 and j2 lose digits below x ~ 1.
  const double crossover = (L == 0) ? 1e-2 : 1.0;
  if (x < crossover)
    return bessel_series(L, x);
  const double s = std::sin(x), c = std::cos(x);
  switch (L) {
  case 0:
    return s / x;
  case 1:
    return (s / x - c) / x;
  default:
    return ((3.0 / (x * x) - 1.0) * s - 3.0 * c / x) / x;
  }
}

cplx scalar_harmonic(int L, int m, AngularPoint pt) {
  if (L < 0 || L > 2 || std::abs(m) > L)
    throw std::invalid_argument("scalar_harmonic: need 0 <= L <= 2, |m| <= L");
  const double ct = std::cos(pt.theta), st = std::sin(pt.theta);
  const cplx phase = std::polar(1.0, m * pt.phi);
  switch (L) {
  case 0:
    return 0.5 / std::sqrt(pi);
  case 1:
    if (m == 0)
      return std::sqrt(3.0 / (4.0 * pi)) * ct;
    return -double(m) * std::sqrt(3.0 / (8.0 * pi)) * st * phase;
  default:
    switch (std::abs(m)) {
    case 0:
      return std::sqrt(5.0 / (16.0 * pi)) * (3.0 * ct * ct - 1.0);
    case 1:
      return -double(m) * std::sqrt(15.0 / (8.0 * pi)) * st * ct * phase;
    default:
      return std::sqrt(15.0 / (32.0 * pi)) * st * st * phase;
    }
  }
}

double clebsch_gordan(int j1, int m1, int j2, int m2, int J, int M) {
  if (m1 + m2 != M || std::abs(m1) > j1 || std::abs(m2) > j2 || std::abs(M) > J)
    return 0.0;
  if (J < std::abs(j1 - j2) || J > j1 + j2)
    return 0.0;
  const double pref =
      std::sqrt((2.0 * J + 1.0) * factorial(J + j1 - j2) * factorial(J - j1 + j2) *
                factorial(j1 + j2 - J) / factorial(j1 + j2 + J + 1)) *
      std::sqrt(factorial(J + M) * factorial(J - M) * factorial(j1 - m1) *
                factorial(j1 + m1) * factorial(j2 - m2) * factorial(j2 + m2));
  double sum = 0.0;
  for (int k = 0; k <= j1 + j2 - J; ++k) {
    const int a = j1 + j2 - J - k, b = j1 - m1 - k, c = j2 + m2 - k;
    const int d = J - j2 + m1 + k, e = J - j1 - m2 + k;
    if (a < 0 || b < 0 || c < 0 || d < 0 || e < 0)
      continue;
    const double den = factorial(k) * factorial(a) * factorial(b) * factorial(c) *
                       factorial(d) * factorial(e);
    sum += ((k % 2) ? -1.0 : 1.0) / den;
  }
  return pref * sum;
}

ComplexVector3 spherical_basis(int sigma) {
  ComplexVector3 e;
  const double s = 1.0 / std::sqrt(2.0);
  switch (sigma) {
  case 1:
    e[0] = -s;
    e[1] = -s * I;
    break;
  case -1:
    e[0] = s;
    e[1] = -s * I;
    break;
  case 0:
    e[2] = 1.0;
    break;
  default:
    throw std::invalid_argument("spherical_basis: sigma must be -1, 0 or 1");
  }
  return e;
}

ComplexVector3 vector_spherical_harmonic(int L, int M, AngularPoint pt) {
  if (L < 0 || L > 2)
    throw std::invalid_argument("vector_spherical_harmonic: L must be 0, 1 or 2");
  if (M < -1 || M > 1)
    throw std::invalid_argument("vector_spherical_harmonic: M must be -1, 0 or 1");
  ComplexVector3 out;
  for (int sigma = -1; sigma <= 1; ++sigma) {
    const int m = M - sigma;
    if (std::abs(m) > L)
      continue;
    const double cg = clebsch_gordan(L, m, 1, sigma, 1, M);
    if (cg == 0.0)
      continue;
    out += (cg * scalar_harmonic(L, m, pt)) * spherical_basis(sigma);
  }
  return out;
}

ComplexVector3 helicity_mode(double k, int M, int lambda, double r, AngularPoint pt) {
  if (!(k > 0.0))
    throw std::invalid_argument("helicity_mode: k must be positive");
  if (lambda != 1 && lambda != -1)
    throw std::invalid_argument("helicity_mode: lambda must be +1 or -1");
  const double radial = std::sqrt(2.0 / pi) * k;
  const double kr = k * r;
  ComplexVector3 psi = std::sqrt(2.0 / 3.0) * radial * spherical_bessel(0, kr) *
                       vector_spherical_harmonic(0, M, pt);
  psi -= std::sqrt(1.0 / 3.0) * radial * spherical_bessel(2, kr) *
         vector_spherical_harmonic(2, M, pt);
  psi -= (I * double(lambda) * radial * spherical_bessel(1, kr)) *
         vector_spherical_harmonic(1, M, pt);
  return (I / std::sqrt(2.0)) * psi;
}

cplx expm1_over(cplx z) {
  if (std::abs(z) < 1e-3) {
    // 1 + z/2 + z^2/6 + ... ; 8 terms exceed double precision at |z| < 1e-3
    cplx term = 1.0, sum = 1.0;
    for (int n = 2; n <= 8; ++n) {
      term *= z / double(n);
      sum += term;
    }
    return sum;
  }
  const double x = z.real(), y = z.imag();
  const double em1 = std::expm1(x);
  const double sh = std::sin(0.5 * y);
  // e^{x+iy} - 1 = (expm1(x) cos y - 2 sin^2(y/2)) + i e^x sin y
  const cplx num(em1 * std::cos(y) - 2.0 * sh * sh, (em1 + 1.0) * std::sin(y));
  return num / z;
}

} // namespace lymanfield
