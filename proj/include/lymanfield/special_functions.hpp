#pragma once
#include <array>
#include <complex>

namespace lymanfield {

using cplx = std::complex<double>;

/// Complex 3-vector in the fixed Cartesian frame (e_x, e_y, e_z).
struct ComplexVector3 {
  std::array<cplx, 3> c{};

  cplx &operator[](int i) { return c[i]; }
  const cplx &operator[](int i) const { return c[i]; }

  ComplexVector3 &operator+=(const ComplexVector3 &o) {
    for (int i = 0; i < 3; ++i)
      c[i] += o.c[i];
    return *this;
  }
  ComplexVector3 &operator-=(const ComplexVector3 &o) {
    for (int i = 0; i < 3; ++i)
      c[i] -= o.c[i];
    return *this;
  }
  ComplexVector3 &operator*=(cplx s) {
    for (auto &x : c)
      x *= s;
    return *this;
  }
  friend ComplexVector3 operator+(ComplexVector3 a, const ComplexVector3 &b) { return a += b; }
  friend ComplexVector3 operator-(ComplexVector3 a, const ComplexVector3 &b) { return a -= b; }
  friend ComplexVector3 operator*(cplx s, ComplexVector3 a) { return a *= s; }
  friend ComplexVector3 operator*(ComplexVector3 a, cplx s) { return a *= s; }
};

/// Hermitian product a* . b
cplx hdot(const ComplexVector3 &a, const ComplexVector3 &b);
/// |a|^2 = a* . a
double norm2(const ComplexVector3 &a);

struct AngularPoint {
  double theta; ///< [0, pi]
  double phi;   ///< [0, 2 pi)
};

/// Components along (e_r, e_theta, e_phi) at the given direction.
ComplexVector3 to_spherical_components(const ComplexVector3 &v, AngularPoint pt);

/// j_L(x) for L = 0, 1, 2 and x >= 0. Closed forms, with a Taylor series
/// below the cancellation region.
double spherical_bessel(int L, double x);

/// Scalar spherical harmonic Y_{L m} (Condon-Shortley phase), L <= 2.
cplx scalar_harmonic(int L, int m, AngularPoint pt);

/// <j1 m1; j2 m2 | J M> via the Racah formula (integer angular momenta).
double clebsch_gordan(int j1, int m1, int j2, int m2, int J, int M);

/// Spherical basis vector e_sigma, sigma in {-1, 0, +1}.
ComplexVector3 spherical_basis(int sigma);

/// Vector spherical harmonic Y^L_{J=1,M}(theta, phi), L in {0,1,2}, M in {-1,0,1}.
ComplexVector3 vector_spherical_harmonic(int L, int M, AngularPoint pt);

/// Helicity eigenmode psi^{(lambda)}_{k,J=1,M} at (r, theta, phi). Satisfies
/// curl psi = lambda k psi and div psi = 0; delta-normalized in k.
ComplexVector3 helicity_mode(double k, int M, int lambda, double r, AngularPoint pt);

/// phi(z) = (e^z - 1)/z, accurate near z = 0.
cplx expm1_over(cplx z);

} // namespace lymanfield
