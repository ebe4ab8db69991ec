#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hadpow/matcore.hpp"

namespace hadpow {

/// Headerless square CSV, one matrix row per line. Throws ParseError
/// (with a 1-based line number) for ragged rows, non-numeric tokens or a
/// non-square grid, and SymmetryError past sym_tol * scale.
SymMatrix parse_matrix_csv(std::string_view text, double sym_tol = 1e-9);
SymMatrix read_matrix_file(const std::filesystem::path& path, double sym_tol = 1e-9);

/// Shortest-safe decimal: 17 significant digits, so parsing the text
/// back yields the identical double.
std::string format_double(double v);
std::string format_matrix_csv(const SymMatrix& a);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace hadpow
