#pragma once
#include "lymanfield/units.hpp"

namespace lymanfield {

/// Interaction coefficient of the p.A coupling between |e; vacuum> and
/// |g; psi_{k,J,M}^{(lambda)}>. Real, helicity independent.
class CouplingFunction {
public:
  explicit CouplingFunction(const AtomParams &atom) : atom_(atom) {}

  /// rho(k) in J m^{1/2}; k >= 0.
  double rho(double k) const;
  /// rho(k) delta_{J,1} delta_{M,m_e}.
  double rho(double k, int J, int M) const;
  /// sqrt(2/(c hbar^2)) rho(omega/c), in s^{-1/2}; omega >= 0.
  double rho_tilde(double omega) const;

  const AtomParams &atom() const { return atom_; }

private:
  AtomParams atom_;
};

/// 2 pi rho_tilde(omega)^2: the frequency-dependent decay rate, rad/s.
double gamma_of_omega(const AtomParams &atom, double omega);

struct OverlapResult {
  double magnitude;      ///< |rho| from direct overlap, J m^{1/2}
  double error_estimate; ///< |fine - coarse| radial refinement difference
};

/// Direct 3D evaluation of -(e/m) <g; psi_{k,1,M}^{(lambda)}| p.A |e; vacuum>
/// with the single-photon vector-potential weight sqrt(hbar/(2 eps0 omega_k)).
/// Slow; intended for validation. Throws QuadratureError if the radial
/// refinement difference exceeds 1e-8 relative.
OverlapResult coupling_overlap_oracle(const AtomParams &atom, double k, int lambda,
                                      int M);

} // namespace lymanfield
