#ifndef SEMILIN_IO_HPP
#define SEMILIN_IO_HPP

#include <stdexcept>
#include <string>

#include "semilin/interval.hpp"
#include "semilin/matrix.hpp"

namespace semilin {

struct ParseError : std::runtime_error {
  std::size_t line;
  std::size_t col;
  ParseError(const std::string& msg, std::size_t line_, std::size_t col_)
      : std::runtime_error("line " + std::to_string(line_) + ", col " +
                           std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

// Matrix text format:
//   line 1: `m n`
//   lines 2..m+1: n whitespace-separated entries, each a scalar token
//   (`3.5`, `-inf`, `inf`) or an interval token `[lo,hi]` with no interior
//   spaces. Scalars promote to degenerate intervals when any entry is an
//   interval.
struct ParsedMatrix {
  Matrix<ScalarInterval> entries;
  bool has_intervals = false;

  // Lower endpoints; equals the matrix itself for all-scalar input.
  Matrix<double> scalar() const {
    Matrix<double> out(entries.rows(), entries.cols());
    for (std::size_t i = 0; i < entries.rows(); ++i)
      for (std::size_t j = 0; j < entries.cols(); ++j)
        out.at(i, j) = entries.at(i, j).lo;
    return out;
  }
};

ParsedMatrix parse_matrix_text(const std::string& text);
ParsedMatrix load_matrix_file(const std::string& path);

// 17 significant digits; `-inf`/`inf` tokens; re-parses to equal matrices,
// bit-exact for idempotent carriers.
std::string format_matrix(const Matrix<double>& m);
std::string format_matrix(const Matrix<ScalarInterval>& m);

}  // namespace semilin

#endif  // SEMILIN_IO_HPP
