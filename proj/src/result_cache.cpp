#include "lymanfield/result_cache.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lymanfield {

namespace {
std::string hex(double v) {
  std::array<char, 40> buf{};
  const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::hex);
  return std::string(buf.data(), r.ptr);
}

double from_hex(const std::string &s) {
  double v = 0.0;
  const char *first = s.data(), *last = s.data() + s.size();
  bool neg = false;
  if (first != last && *first == '-') {
    neg = true;
    ++first;
  }
  const auto [ptr, ec] = std::from_chars(first, last, v, std::chars_format::hex);
  if (ec != std::errc() || ptr != last)
    throw std::runtime_error("result cache: bad value '" + s + "'");
  return neg ? -v : v;
}

std::string field_after(const std::string &tok, const std::string &prefix) {
  if (tok.rfind(prefix, 0) != 0)
    throw std::runtime_error("result cache: expected '" + prefix + "...', got '" + tok + "'");
  return tok.substr(prefix.size());
}

constexpr const char *cache_tolerance = "pv_window_check=1e-8";
} // namespace

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in)
    return;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty())
      continue;
    std::istringstream ls(line);
    std::string key, name, value, tol, ver, extra;
    if (!(ls >> key >> name >> value >> tol >> ver) || (ls >> extra))
      throw std::runtime_error("result cache " + path_ + ": malformed line " +
                               std::to_string(lineno));
    records_[{key, name}] = {from_hex(value), field_after(tol, "tol="),
                             field_after(ver, "version=")};
  }
}

std::optional<CacheRecord> ResultCache::get(const std::string &preset_key,
                                            const std::string &name) const {
  const auto it = records_.find({preset_key, name});
  if (it == records_.end())
    return std::nullopt;
  return it->second;
}

void ResultCache::put(const std::string &preset_key, const std::string &name, double value,
                      const std::string &tolerance) {
  records_[{preset_key, name}] = {value, tolerance, code_version};
}

void ResultCache::save() const {
  if (path_.empty())
    throw std::logic_error("result cache: no path to save to");
  std::ofstream out(path_);
  if (!out)
    throw std::runtime_error("result cache: cannot write " + path_);
  for (const auto &[k, r] : records_)
    out << k.first << ' ' << k.second << ' ' << hex(r.value) << " tol=" << r.tolerance
        << " version=" << r.version << '\n';
}

std::string preset_key(Preset preset, int m_e, double A, double B) {
  if (preset == Preset::Hydrogen)
    return "hydrogen:m_e=" + std::to_string(m_e);
  return "synthetic:A=" + hex(A) + ",B=" + hex(B) + ",m_e=" + std::to_string(m_e);
}

DecaySpectrum cached_spectrum(ResultCache *cache, Preset preset, int m_e, double A, double B,
                              bool *hit) {
  const std::string key = preset_key(preset, m_e, A, B);
  const std::array<const char *, 4> names{"G", "omega_a", "gamma_a", "delta_a"};
  if (cache) {
    std::array<double, 4> v{};
    bool all = true;
    for (std::size_t i = 0; i < names.size() && all; ++i) {
      const auto r = cache->get(key, names[i]);
      all = r.has_value();
      if (all)
        v[i] = r->value;
    }
    if (all) {
      if (hit)
        *hit = true;
      return DecaySpectrum::from_constants(preset, make_atom_params(m_e), v[0], v[1], v[2], v[3]);
    }
  }
  if (hit)
    *hit = false;
  DecaySpectrum spec = preset == Preset::Hydrogen
                           ? DecaySpectrum::hydrogen(make_atom_params(m_e))
                           : DecaySpectrum::synthetic(A, B, m_e);
  if (cache) {
    const std::array<double, 4> v{spec.coupling_strength(), spec.omega_a(), spec.gamma_a(),
                                  spec.delta_a()};
    for (std::size_t i = 0; i < names.size(); ++i)
      cache->put(key, names[i], v[i], cache_tolerance);
  }
  return spec;
}

} // namespace lymanfield
