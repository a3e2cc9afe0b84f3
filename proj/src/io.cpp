#include "semilin/io.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace semilin {

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t col;  // 1-based position of the first character
};

std::vector<std::vector<Token>> tokenize_lines(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < raw.size() &&
             !std::isspace(static_cast<unsigned char>(raw[i])))
        ++i;
      toks.push_back({raw.substr(start, i - start), lineno, start + 1});
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

double parse_scalar(const std::string& text, const Token& where,
                    std::size_t col_offset) {
  if (text == "inf" || text == "+inf")
    return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  const char* begin = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || text.find("inf") != std::string::npos ||
      text.find("nan") != std::string::npos)
    throw ParseError("bad scalar token '" + text + "'", where.line,
                     where.col + col_offset);
  return v;
}

ScalarInterval parse_entry(const Token& tok, bool& saw_interval) {
  const std::string& t = tok.text;
  if (!t.empty() && t.front() == '[') {
    if (t.back() != ']')
      throw ParseError("unterminated interval token '" + t + "'", tok.line,
                       tok.col);
    const std::string body = t.substr(1, t.size() - 2);
    const std::size_t comma = body.find(',');
    if (comma == std::string::npos || body.find(',', comma + 1) != std::string::npos)
      throw ParseError("interval token must be [lo,hi], got '" + t + "'",
                       tok.line, tok.col);
    const double lo = parse_scalar(body.substr(0, comma), tok, 1);
    const double hi = parse_scalar(body.substr(comma + 1), tok, comma + 2);
    saw_interval = true;
    return {lo, hi};
  }
  const double v = parse_scalar(t, tok, 0);
  return {v, v};
}

std::size_t parse_dim(const Token& tok) {
  const char* begin = tok.text.c_str();
  char* end = nullptr;
  const long v = std::strtol(begin, &end, 10);
  if (end == begin || *end != '\0' || v <= 0)
    throw ParseError("expected positive dimension, got '" + tok.text + "'",
                     tok.line, tok.col);
  return static_cast<std::size_t>(v);
}

}  // namespace

ParsedMatrix parse_matrix_text(const std::string& text) {
  const auto lines = tokenize_lines(text);
  if (lines.empty()) throw ParseError("empty input", 1, 1);
  const auto& header = lines[0];
  if (header.size() != 2)
    throw ParseError("header must be 'm n'", header[0].line,
                     header.size() > 2 ? header[2].col : header[0].col);
  const std::size_t m = parse_dim(header[0]);
  const std::size_t n = parse_dim(header[1]);

  if (lines.size() < m + 1) {
    const auto& last = lines.back().back();
    throw ParseError("expected " + std::to_string(m) + " data rows, got " +
                         std::to_string(lines.size() - 1),
                     last.line + 1, 1);
  }
  if (lines.size() > m + 1) {
    const auto& extra = lines[m + 1][0];
    throw ParseError("unexpected extra row", extra.line, extra.col);
  }

  ParsedMatrix out{Matrix<ScalarInterval>(m, n), false};
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = lines[i + 1];
    if (row.size() != n)
      throw ParseError("expected " + std::to_string(n) + " entries, got " +
                           std::to_string(row.size()),
                       row[0].line,
                       row.size() > n ? row[n].col : row.back().col);
    for (std::size_t j = 0; j < n; ++j)
      out.entries.at(i, j) = parse_entry(row[j], out.has_intervals);
  }
  return out;
}

ParsedMatrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_matrix_text(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line, e.col);
  }
}

std::string format_matrix(const Matrix<double>& m) {
  std::string out =
      std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += " ";
      out += format_scalar(m.at(i, j));
    }
    out += "\n";
  }
  return out;
}

std::string format_matrix(const Matrix<ScalarInterval>& m) {
  std::string out =
      std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += " ";
      out += "[" + format_scalar(m.at(i, j).lo) + "," +
             format_scalar(m.at(i, j).hi) + "]";
    }
    out += "\n";
  }
  return out;
}

}  // namespace semilin
