#pragma once
// Far-field closed forms for the field coefficients and the energy density,
// plus the log-log slope fitter used to check the r^-6 law.
//
// Conventions: R0(q) = K(q)/(1+q^2)^2 and R1(q) = q K(q)/(1+q^2)^2, each split
// into the e^{-iqp} branch (+) and the e^{-(A+iB)p} branch (-).

#include "lymanfield/field.hpp"
#include "lymanfield/friedrichs.hpp"
#include "lymanfield/oscillatory.hpp"
#include "lymanfield/units.hpp"

#include <vector>

namespace lymanfield {

enum class Branch { Plus, Minus };

/// Exact derivatives d^n R/dq^n at q = 0 for n = 0, 1, 2. `order` selects R0
/// (sine parity) or R1 (cosine parity, as it enters F_1).
EndpointData R_endpoint_data(int order, Branch branch, const DimensionlessParams &d);

/// Second-derivative values of R1 at q = 0 in the form usually quoted for this
/// model. They equal h'(0) with h = R1/q, i.e. half the true second
/// derivative; kept for comparison only.
cplx R1_second_derivative_quoted(Branch branch, const DimensionlessParams &d);

/// Time function of the far-field amplitude, I_1 ~ T / r'^3:
/// T = 2 (1 - e^{-(A+iB)p}) / (A + iB).
cplx T_func(const DimensionlessParams &d);
/// T rebuilt from the endpoint derivatives through the integration-by-parts
/// expansion of the sine and cosine integrals in I_1.
cplx T_from_endpoints(const DimensionlessParams &d);
/// The published closed form
/// (1/(A+iB)) (1 - E - 2ip + i(1 - E)/(A+iB)), E = e^{-(A+iB)p}.
cplx T_func_quoted(const DimensionlessParams &d);

struct AsymptoticPrediction {
  cplx value;
  int leading_power;
  bool far_field; ///< r' >= 20 max(1, p)
};

bool is_far_field(const DimensionlessParams &d);

/// -i lambda (2/3)^{5/2} T / r'^3 (scaled units).
AsymptoticPrediction F1_asymptotic_scaled(const DimensionlessParams &d, int lambda);
/// Same in SI: -i lambda (2/3)^{11/2} sqrt(alpha^5/c) m c^2 r_B^2/(pi hbar) T / r^3.
AsymptoticPrediction F1_asymptotic(double r, double t, const DecaySpectrum &spec, int lambda);
/// (2/3)^3 (-2 K'(0)) / r'^4 (scaled units), the leading sine term of I_0.
AsymptoticPrediction F0_asymptotic_scaled(const DimensionlessParams &d);

/// gamma_0 = sin^2 theta, gamma_1 = (1 + cos^2 theta)/4.
double gamma_angular(int m_e, double theta);
/// (8 pi / 3) Y^{1*}_{1,m} . Y^1_{1,m}: sin^2 theta for m = 0 and
/// (1 + cos^2 theta)/2 for |m| = 1.
double dipole_weight(int m_e, double theta);

/// Far-field density 2 hbar |F1_asym|^2 Y^{1*}.Y^1, written as
/// (2/3)^10 m^2 c^3 r_B^4 alpha^5/(2 pi^3 hbar) w(theta) |T|^2 / r^6 with
/// w = dipole_weight. SI units, hydrogen preset.
AsymptoticPrediction energy_density_asymptotic(double r, double theta, double t, int m_e,
                                               const DecaySpectrum &spec);
/// Scaled counterpart: 2 |F1_asym|^2 (3/(8 pi)) w(theta).
AsymptoticPrediction energy_density_asymptotic_scaled(const DimensionlessParams &d,
                                                      double theta, int m_e);

struct PowerLawFit {
  double exponent;
  double stderr_;
  double log_prefactor;
  std::size_t used;
  std::size_t rejected;
};

/// Unweighted least squares of log y against log x. Points whose error
/// exceeds 1% of the value, or that are non-positive, are dropped; at least
/// 8 points spanning 2 decades must remain (std::invalid_argument otherwise).
PowerLawFit fit_power_law(const std::vector<double> &x, const std::vector<double> &y,
                          const std::vector<double> &err);
PowerLawFit fit_power_law(const FieldScan &scan);

} // namespace lymanfield
