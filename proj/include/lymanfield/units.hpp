#pragma once
#include <complex>

namespace lymanfield {

/// CODATA 2018 base constants (SI). Every derived number in the project
/// traces back to this table.
namespace codata {
inline constexpr double alpha = 7.2973525693e-3;
inline constexpr double electron_mass = 9.1093837015e-31; // kg
inline constexpr double light_speed = 299792458.0;        // m/s
inline constexpr double hbar = 1.054571817e-34;           // J s
inline constexpr double eps0 = 8.8541878128e-12;          // F/m
} // namespace codata

/// Two-level hydrogen (1s, 2p) data and the scales derived from it.
struct AtomParams {
  double alpha;
  double m;
  double c;
  double hbar;
  double eps0;
  double r_B;     ///< Bohr radius hbar/(alpha m c)
  double K;       ///< momentum cutoff 3/(2 r_B)
  double omega_a; ///< 2p -> 1s Bohr angular frequency
  double E_g;     ///< ground energy, fixed to 0
  int m_e;        ///< magnetic quantum number of the excited state

  double cK() const { return c * K; }
  /// Elementary charge reconstructed from alpha (e^2 = 4 pi eps0 alpha hbar c).
  double elementary_charge() const;
};

/// Throws std::invalid_argument unless m_e is -1, 0 or +1.
AtomParams make_atom_params(int m_e);

/// Far-field parameter set in Appendix units: frequencies in cK, times in
/// 1/(cK), lengths in 1/K.
struct DimensionlessParams {
  double A;       ///< Gamma_a / (2 cK)
  double B;       ///< (omega_a + Delta_a) / (cK)
  double p;       ///< cK t
  double r_prime; ///< K r

  /// exp(-(A + iB) p): the decayed excited-state phase factor at time p.
  std::complex<double> decay_factor() const;
};

/// Physical counterpart of DimensionlessParams.
struct PhysicalPoint {
  double gamma_a; ///< rad/s
  double delta_a; ///< rad/s
  double t;       ///< s
  double r;       ///< m
};

DimensionlessParams to_dimensionless(const AtomParams &atom, double gamma_a,
                                     double delta_a, double t, double r);
PhysicalPoint to_physical(const AtomParams &atom, const DimensionlessParams &d);

/// (pi r_B^3)^{-1/2} exp(-r/r_B), in m^{-3/2}.
double ground_wavefunction(const AtomParams &atom, double r);

/// beta_{m_e}(theta, phi) (r/r_B) exp(-r/(2 r_B)), in m^{-3/2}.
std::complex<double> excited_wavefunction(const AtomParams &atom, double r,
                                          double theta, double phi, int m_e);

} // namespace lymanfield
