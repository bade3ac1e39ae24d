#pragma once
// Persistent store of scalar spectral constants (Gamma_a, Delta_a, ...).
// Values are written as hexadecimal floats, so a hit is bit-identical.
//
// File format, one record per line:
//   <preset key> <name> <hex value> tol=<tolerance> version=<code version>

#include "lymanfield/friedrichs.hpp"

#include <map>
#include <optional>
#include <string>

namespace lymanfield {

inline constexpr const char *code_version = "1.0.0";

struct CacheRecord {
  double value;
  std::string tolerance;
  std::string version;
};

class ResultCache {
public:
  ResultCache() = default;
  /// Loads `path` if it exists; a missing file is an empty cache. Malformed
  /// lines throw std::runtime_error.
  explicit ResultCache(std::string path);

  std::optional<CacheRecord> get(const std::string &preset_key, const std::string &name) const;
  void put(const std::string &preset_key, const std::string &name, double value,
           const std::string &tolerance);
  /// Writes all records back to the file the cache was opened from.
  void save() const;

  const std::string &path() const { return path_; }
  std::size_t size() const { return records_.size(); }

private:
  std::string path_;
  std::map<std::pair<std::string, std::string>, CacheRecord> records_;
};

/// "hydrogen:m_e=<m>" or "synthetic:A=<hex>,B=<hex>,m_e=<m>".
std::string preset_key(Preset preset, int m_e, double A = 0.0, double B = 0.0);

/// Builds the spectrum, taking G, omega_a, Gamma_a, Delta_a from the cache
/// when all four are present and storing them otherwise. `hit` reports which.
DecaySpectrum cached_spectrum(ResultCache *cache, Preset preset, int m_e, double A, double B,
                              bool *hit = nullptr);

} // namespace lymanfield
