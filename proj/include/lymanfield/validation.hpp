#pragma once
// Invariant suite behind the CLI's validate mode (hydrogen preset).

#include "lymanfield/friedrichs.hpp"

#include <string>
#include <vector>

namespace lymanfield {

struct ValidationCheck {
  std::string name;
  bool passed;
  double measured;  ///< the quantity compared against the tolerance
  double tolerance;
  std::string detail;
};

/// Runs every check; exceptions inside a check mark it failed.
std::vector<ValidationCheck> run_validation(const DecaySpectrum &hydrogen);

} // namespace lymanfield
