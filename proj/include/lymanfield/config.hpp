#pragma once
// Run configuration: "key = value" text, '#' comments, case-sensitive keys.

#include "lymanfield/friedrichs.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lymanfield {

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class RunMode { Decay, Spectrum, Field, Asymptotics, Angular, Validate };

const char *to_string(RunMode m);
const char *to_string(Preset p);

struct RunConfig {
  RunMode mode = RunMode::Validate;
  Preset preset = Preset::Hydrogen;
  int m_e = 0;
  std::optional<double> A, B; ///< synthetic preset only
  std::optional<double> p;    ///< dimensionless time cKt
  std::optional<double> t;    ///< time in s, hydrogen preset only
  double phi = 0.0;
  double tol = 1e-11; ///< relative tolerance of the field quadrature
  std::vector<double> tau_grid;   ///< Gamma_a t
  std::vector<double> x_grid;     ///< (omega - Omega_a) / Gamma_a
  std::vector<double> r_grid;     ///< r in m (hydrogen) or r' (synthetic)
  std::vector<double> theta_grid; ///< rad
};

/// Grid syntax: "logspace(a,b,n)", "linspace(a,b,n)" or "v1, v2, ...".
std::vector<double> parse_grid(const std::string &text);

/// Parses and validates; throws ConfigError with the offending line.
RunConfig parse_config(const std::string &text);

/// Applies per-mode defaults for grids left unset.
void fill_defaults(RunConfig &cfg);

} // namespace lymanfield
