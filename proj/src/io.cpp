#include "hadpow/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hadpow/errors.hpp"

namespace hadpow {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_token(std::string_view tok, int line) {
  tok = trim(tok);
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size())
    throw ParseError("line " + std::to_string(line) + ": not a number: '" + std::string(tok) + "'", line);
  if (!std::isfinite(v)) throw ParseError("line " + std::to_string(line) + ": non-finite value", line);
  return v;
}

}  // namespace

SymMatrix parse_matrix_csv(std::string_view text, double sym_tol) {
  std::vector<Vector> rows;
  int line_no = 0;
  std::size_t width = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (trim(line).empty()) {
      if (trim(text).empty()) break;
      throw ParseError("line " + std::to_string(line_no) + ": empty row", line_no);
    }
    Vector row;
    while (true) {
      const std::size_t comma = line.find(',');
      row.push_back(parse_token(line.substr(0, comma), line_no));
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    if (rows.empty()) width = row.size();
    if (row.size() != width)
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(width) +
                           " values, found " + std::to_string(row.size()),
                       line_no);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty matrix file", 1);
  if (rows.size() != width)
    throw ParseError("matrix is not square (" + std::to_string(rows.size()) + " rows, " +
                         std::to_string(width) + " columns)",
                     static_cast<int>(rows.size()));
  return SymMatrix::from_rows(rows, sym_tol);
}

SymMatrix read_matrix_file(const std::filesystem::path& path, double sym_tol) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_csv(buf.str(), sym_tol);
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_matrix_csv(const SymMatrix& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j) out += ',';
      out += format_double(a(i, j));
    }
    out += '\n';
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string(), 0);
  out << text;
}

}  // namespace hadpow
