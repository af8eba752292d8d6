#ifndef TRIORTH_MATRIX_IO_HPP
#define TRIORTH_MATRIX_IO_HPP

// Matrix text format: one row per line of '0'/'1'; spaces and tabs are ignored,
// '#' starts a comment, blank lines are skipped, and all rows share one length.

#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "triorth/gf2.hpp"

namespace triorth {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

  /// 1-based line number, or 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses a single row: '0'/'1' with spaces and tabs ignored.
inline Vector parse_vector(std::string_view text, std::size_t line = 0) {
  std::string bits;
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\r') continue;
    if (ch != '0' && ch != '1') throw ParseError(line, "non-binary symbol '" + std::string(1, ch) + "'");
    bits.push_back(ch);
  }
  if (bits.empty()) throw ParseError(line, "empty vector");
  return Vector::from_string(bits);
}

inline Matrix parse_matrix(std::string_view text) {
  Matrix m;
  bool have_width = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    Vector row = parse_vector(line, line_no);
    if (!have_width) {
      m = Matrix(row.size());
      have_width = true;
    } else if (row.size() != m.cols()) {
      throw ParseError(line_no, "row has " + std::to_string(row.size()) + " columns, expected " +
                                    std::to_string(m.cols()));
    }
    m.push_back(std::move(row));
  }
  if (!have_width) throw ParseError(0, "no matrix rows found");
  return m;
}

inline Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return parse_matrix(buf.str());
}

inline std::string format_matrix(const Matrix& m) {
  std::string out;
  for (const auto& r : m) {
    out += r.to_string();
    out += '\n';
  }
  return out;
}

}  // namespace triorth

#endif  // TRIORTH_MATRIX_IO_HPP
