#pragma once

/// @file bfile.hpp
/// @brief OEIS b-files: ASCII lines "n a(n)", no header, newline terminated,
///        indices contiguous and strictly increasing.

#include <cctype>
#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "series.hpp"

namespace qcore {

class BFileError : public std::runtime_error {
 public:
  BFileError(const std::string& what, std::size_t line)
      : std::runtime_error("b-file line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct BFile {
  std::size_t first_index = 0;
  std::vector<Coefficient> values;  // values[i] is a(first_index + i)

  std::size_t last_index() const { return first_index + values.size() - 1; }
};

/// Parses a b-file. Lines starting with '#' and blank lines are skipped, as
/// OEIS permits; anything else must be "index value".
inline BFile read_bfile(std::istream& in) {
  BFile bf;
  std::string line;
  std::size_t line_no = 0;
  std::optional<unsigned long long> prev;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string idx_text, val_text, extra;
    ls >> idx_text >> val_text;
    if (idx_text.empty() || val_text.empty() || (ls >> extra))
      throw BFileError("expected exactly two fields \"index value\"", line_no);
    for (char ch : idx_text)
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw BFileError("index is not a non-negative integer", line_no);
    const unsigned long long idx = std::stoull(idx_text);
    Coefficient value;
    if (value.set_str(val_text, 10) != 0) throw BFileError("value is not an integer", line_no);
    if (prev && idx != *prev + 1) throw BFileError("index gap: expected " + std::to_string(*prev + 1) + ", got " + idx_text, line_no);
    if (!prev) bf.first_index = static_cast<std::size_t>(idx);
    prev = idx;
    bf.values.push_back(std::move(value));
  }
  if (bf.values.empty()) throw BFileError("no data lines", line_no);
  return bf;
}

inline BFile read_bfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_bfile(in);
}

/// Writes "n a(n)\n" for n = 0..series.order().
inline void write_bfile(std::ostream& out, const TruncatedSeries& s) {
  for (std::size_t n = 0; n <= s.order(); ++n) out << n << ' ' << s.at(n) << '\n';
}

struct BFileDiff {
  std::size_t compared = 0;
  std::optional<std::size_t> first_bad_index;
  Coefficient expected, found;
};

/// Compares a b-file against generated coefficients on the overlapping range.
inline BFileDiff check_bfile(const BFile& bf, const TruncatedSeries& s) {
  BFileDiff d;
  for (std::size_t i = 0; i < bf.values.size(); ++i) {
    const std::size_t n = bf.first_index + i;
    if (n > s.order()) break;
    ++d.compared;
    if (bf.values[i] != s.at(n)) {
      d.first_bad_index = n;
      d.expected = s.at(n);
      d.found = bf.values[i];
      break;
    }
  }
  return d;
}

}  // namespace qcore
