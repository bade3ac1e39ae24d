#pragma once
// CSV output: comma separated, header with units, every number written with
// 17 significant digits in scientific notation independent of the locale.

#include <ostream>
#include <string>
#include <vector>

namespace lymanfield {

std::string format_double(double v);

class CsvWriter {
public:
  CsvWriter(std::ostream &out, const std::vector<std::string> &header);

  CsvWriter &operator<<(double v);
  CsvWriter &operator<<(int v);
  CsvWriter &operator<<(const std::string &v);
  CsvWriter &operator<<(const char *v) { return *this << std::string(v); }
  /// Ends the row; throws std::logic_error if the column count is wrong.
  void end_row();

private:
  void cell(const std::string &s);
  std::ostream &out_;
  std::size_t columns_;
  std::size_t filled_ = 0;
};

/// 64-bit FNV-1a of a byte string.
unsigned long long fnv1a64(const std::string &data);

} // namespace lymanfield
