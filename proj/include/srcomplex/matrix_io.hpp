#ifndef SRCOMPLEX_MATRIX_IO_HPP
#define SRCOMPLEX_MATRIX_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "srcomplex/types.hpp"

namespace srcomplex {

/// Plain-text matrix: a "rows cols" header followed by rows*cols integers,
/// separated by arbitrary whitespace (the 4ti2 layout).
IntMatrix parse_matrix(std::string_view text);

/// Canonical writer: header line, one line per row, single spaces, trailing
/// newline.
std::string write_matrix(const IntMatrix& a);

IntMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const IntMatrix& a);

/// 64-bit FNV-1a of the canonical text, as 16 hex digits.
std::string matrix_hash(const IntMatrix& a);

}  // namespace srcomplex

#endif  // SRCOMPLEX_MATRIX_IO_HPP
