#pragma once
// Position-space field of the emitted photon and its energy density.
//
// The radial integrals
//   I_L(r') = int_0^inf K(q) q^2/(1+q^2)^2 j_L(q r') dq,
//   K(q)    = (e^{-iqp} - e^{-(A+iB)p}) / (A + i(B - q)),
// are evaluated in two pieces. On [0, q_w] the entire kernel K and j_L are
// integrated directly on panels no wider than half the fastest period. On
// [q_w, inf) j_L is expanded into sines and cosines and the oscillatory
// engine handles e^{-iqp} e^{+-iqr'} and e^{+-iqr'} separately.

#include "lymanfield/friedrichs.hpp"
#include "lymanfield/special_functions.hpp"
#include "lymanfield/units.hpp"

#include <array>
#include <string>
#include <vector>

namespace lymanfield {

enum class FieldMode { Physical, Dimensionless };

/// r and t in SI (Physical) or r' = Kr and p = cKt (Dimensionless).
struct FieldPoint {
  double r;
  double theta;
  double phi;
  double t;
  FieldMode mode = FieldMode::Dimensionless;
};

struct FieldOptions {
  double rel_tol = 1e-11; ///< oscillatory-tail convergence tolerance
  bool parallel = true;
  /// Evaluate j_2 through (3/x) j_1 - j_0 instead of its closed form.
  bool j2_via_recurrence = false;
};

/// I_0, I_1, I_2 with error estimates.
struct RadialIntegrals {
  std::array<cplx, 3> I{};
  std::array<double, 3> error{};
};

/// Largest r' + p accepted by radial_integrals. The direct window needs about
/// (r' + p)/3 panels; for hydrogen the limit is t + r/c of about 1.2e-11 s.
inline constexpr double kMaxPhase = 1e8;

/// K(q), evaluated stably near the removable quasi-pole q = B - iA.
cplx field_kernel(double q, double A, double B, double p);

RadialIntegrals radial_integrals(const DimensionlessParams &d, const FieldOptions &opt = {});

struct FLTriple {
  std::array<cplx, 3> F{}; ///< F_0, F_1, F_2
  std::array<double, 3> error{};
  int lambda = 1;
  FieldMode mode = FieldMode::Dimensionless;
};

/// Scaled coefficients (no unit prefactor):
///   F0 = (2/3)^3 I0,  F1 = -i lambda (2/3)^{5/2} I1,  F2 = -(2/3)^3/sqrt2 I2.
FLTriple compute_FL_scaled(const DimensionlessParams &d, int lambda,
                           const FieldOptions &opt = {});

/// sqrt(alpha^5/c) m c^2 / (pi hbar r_B): restores SI units to the scaled F_L.
double field_unit(const AtomParams &atom);

/// F_L at a point. Physical mode needs the hydrogen preset.
FLTriple compute_FL(const FieldPoint &pt, const DecaySpectrum &spec, int lambda,
                    const FieldOptions &opt = {});

/// d_k(t) = sqrt(c) D(ck, t); hydrogen preset, SI units.
cplx d_k_amplitude(double k, double t, const DecaySpectrum &spec);

/// Sum_L F_L Y^L_{1,m_e}(theta, phi).
ComplexVector3 helicity_field(const FLTriple &F, int m_e, AngularPoint pt);
ComplexVector3 helicity_field(const FieldPoint &pt, const DecaySpectrum &spec, int lambda,
                              const FieldOptions &opt = {});

struct DensityValue {
  double value;
  double error_estimate;
};

/// |psi^(h+)|^2 + |psi^(h-)|^2, times hbar in physical mode. Both helicity
/// vectors are formed in full.
DensityValue energy_density(const FieldPoint &pt, const DecaySpectrum &spec,
                            const FieldOptions &opt = {});
/// Same, reusing integrals already computed at the point's radius.
DensityValue energy_density_from(const RadialIntegrals &I, double unit_factor, double hbar,
                                 int m_e, AngularPoint ang);

struct ScanPoint {
  FieldPoint point;
  double density = 0.0;
  double error_estimate = 0.0;
  bool ok = false;
  std::string failure;
};

struct FieldScan {
  std::vector<ScanPoint> points;
  FieldMode mode = FieldMode::Dimensionless;
  int m_e = 0;
  double A = 0.0, B = 0.0;
  double gamma_a = 0.0, delta_a = 0.0;
  double rel_tol = 0.0;
  std::string timestamp;

  bool all_ok() const;
};

/// Density along r at fixed (theta, phi, t). Points are independent and run
/// in parallel when opt.parallel; failures are recorded, not thrown.
FieldScan radial_scan(const std::vector<double> &r_values, double theta, double phi, double t,
                      FieldMode mode, const DecaySpectrum &spec, const FieldOptions &opt = {});
/// Density along theta at fixed (r, phi, t); the radial integrals are shared.
FieldScan angular_scan(const std::vector<double> &thetas, double r, double phi, double t,
                       FieldMode mode, const DecaySpectrum &spec, const FieldOptions &opt = {});

} // namespace lymanfield
