#include "lymanfield/csv.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

namespace lymanfield {

std::string format_double(double v) {
  std::array<char, 40> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::scientific, 16);
  return std::string(buf.data(), res.ptr);
}

CsvWriter::CsvWriter(std::ostream &out, const std::vector<std::string> &header)
    : out_(out), columns_(header.size()) {
  for (const auto &h : header)
    cell(h);
  end_row();
}

void CsvWriter::cell(const std::string &s) {
  if (filled_ > 0)
    out_ << ',';
  if (s.find_first_of(",\"\n") != std::string::npos) {
    out_ << '"';
    for (char c : s) {
      if (c == '"')
        out_ << '"';
      out_ << c;
    }
    out_ << '"';
  } else {
    out_ << s;
  }
  ++filled_;
}

CsvWriter &CsvWriter::operator<<(double v) {
  cell(format_double(v));
  return *this;
}

CsvWriter &CsvWriter::operator<<(int v) {
  cell(std::to_string(v));
  return *this;
}

CsvWriter &CsvWriter::operator<<(const std::string &v) {
  cell(v);
  return *this;
}

void CsvWriter::end_row() {
  if (filled_ != columns_)
    throw std::logic_error("CsvWriter: row has " + std::to_string(filled_) + " cells, expected " +
                           std::to_string(columns_));
  out_ << '\n';
  filled_ = 0;
}

unsigned long long fnv1a64(const std::string &data) {
  unsigned long long h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace lymanfield
