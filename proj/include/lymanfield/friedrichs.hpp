#pragma once
// Decay dynamics of the excited level coupled to the photon continuum.
//
// Every spectrum carries a frequency unit: rad/s for the hydrogen preset,
// cK for synthetic presets (which are defined directly in those units).
// Public functions take frequencies and times in that unit system.

#include "lymanfield/coupling.hpp"
#include "lymanfield/quadrature.hpp"
#include "lymanfield/special_functions.hpp"
#include "lymanfield/units.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace lymanfield {

enum class Preset { Hydrogen, Synthetic };

/// Coupling shape shared by both presets: Gamma(nu) = G nu / (1 + nu^2)^4
/// with nu = omega / (cK).
double coupling_shape(double nu);

/// pv int_0^inf f(s)/(nu - s) ds with the coupling shape f, by subtraction on
/// the symmetric window [nu - w, nu + w]. Requires 0 < w <= nu.
double pv_shape_integral(double nu, double window);

/// Default window for pv_shape_integral: min(nu/2, 1/2).
double default_pv_window(double nu);

struct DeltaTableHolder;

class DecaySpectrum {
public:
  /// Hydrogen Lyman-alpha; Gamma_a and Delta_a computed from the coupling.
  static DecaySpectrum hydrogen(const AtomParams &atom);
  /// Spectrum in cK units whose resonance has Gamma_a = 2A and
  /// Omega_a = omega_a + Delta_a = B. Solves for the coupling strength and
  /// the bare frequency. Throws std::invalid_argument if no solution exists.
  static DecaySpectrum synthetic(double A, double B, int m_e = 0);
  /// Rebuild from cached resonance constants (skips the pv solve).
  static DecaySpectrum from_constants(Preset preset, const AtomParams &atom, double G,
                                      double omega_a, double gamma_a, double delta_a);

  Preset preset() const { return preset_; }
  const AtomParams &atom() const { return atom_; }
  /// cK expressed in this spectrum's frequency unit (cK in rad/s, or 1).
  double unit() const { return unit_; }
  /// Coupling strength G in Gamma(nu) = G f(nu).
  double coupling_strength() const { return G_; }

  double gamma_a() const { return gamma_a_; }
  double delta_a() const { return delta_a_; }
  double omega_a() const { return omega_a_; }
  double omega_shifted() const { return omega_a_ + delta_a_; }

  double gamma(double omega) const;
  double rho_tilde(double omega) const;
  /// Delta(omega) by direct principal-value quadrature.
  double lamb_shift(double omega) const;
  /// Delta(omega) - Delta_a, from the interpolation table inside the
  /// peak-centred range and by direct quadrature outside it.
  double lamb_shift_offset(double omega) const;

  /// Exact spectral density (1/2pi) Gamma / ((w - w_a - Delta)^2 + Gamma^2/4).
  double g(double omega) const;
  /// Weisskopf-Wigner Lorentzian with the constant width Gamma_a at Omega_a.
  double g_w(double omega) const;
  /// g at omega = Omega_a + Gamma_a x, times Gamma_a (dimensionless density in x).
  double g_of_x(double x) const;

  /// Lower limit of the peak-centred variable x = (omega - Omega_a)/Gamma_a.
  double x_min() const;
  static constexpr double x_max = 1e4;

  /// A, B, p, r' for a time and radius (SI for hydrogen; scaled otherwise).
  DimensionlessParams dimensionless(double t, double r) const;

  const std::vector<std::string> &warnings() const { return warnings_; }

private:
  DecaySpectrum() = default;
  void finish();
  const DeltaTableHolder &table() const;

  Preset preset_ = Preset::Hydrogen;
  AtomParams atom_{};
  double unit_ = 1.0;
  double G_ = 0.0;
  double omega_a_ = 0.0;
  double gamma_a_ = 0.0;
  double delta_a_ = 0.0;
  std::vector<std::string> warnings_;
  std::shared_ptr<DeltaTableHolder> holder_;
};

struct PvResult {
  double value;            ///< Delta(omega), spectrum units
  double half_window;      ///< same with the window halved
  double relative_change;  ///< |value - half_window| / |value|
};

/// Delta(omega) with the window-robustness check; throws QuadratureError if
/// the two windows disagree beyond 1e-8 relative.
PvResult lamb_shift_delta(const DecaySpectrum &spec, double omega);

struct AmplitudeResult {
  cplx value;
  double error_estimate;
};

/// int_0^inf g(w) e^{-iwt} dw on the peak-centred grid.
AmplitudeResult c0_exact(const DecaySpectrum &spec, double t);
/// exp(-Gamma_a t/2 - i Omega_a t).
cplx c0_weak(const DecaySpectrum &spec, double t);
/// Closed-form photon amplitude density in the weak-coupling solution,
/// units (spectrum frequency unit)^{-1/2}.
cplx photon_amplitude_D(const DecaySpectrum &spec, double omega, double t);
/// int |D|^2 dw over the peak-centred range.
double photon_norm(const DecaySpectrum &spec, double t);
/// |c0_weak|^2 + int |D|^2 dw.
double norm_check(const DecaySpectrum &spec, double t);
/// int g dw over the peak-centred range; error includes the truncated tail.
QuadResult<double> integral_of_g(const DecaySpectrum &spec);

/// Snapshot of the state at time t: exact c0 and the photon amplitude.
struct AmplitudeState {
  double t;
  cplx c0;
  std::function<cplx(double)> D;
};
AmplitudeState amplitude_state(const DecaySpectrum &spec, double t);

} // namespace lymanfield
