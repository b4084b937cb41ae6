#pragma once

// MatrixMarket coordinate and alist readers/writers for 0/1 matrices.
//
// MatrixMarket: "%%MatrixMarket matrix coordinate integer general", then
// "rows cols nnz", then 1-based "i j 1" sorted by (i, j).
// alist: "N M" (columns, rows), max column and row degree, the column
// degrees, the row degrees, then N column and M row neighbour lists, 1-based
// and padded with zeros to the maximum degree.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "cubica/bitmatrix.hpp"

namespace cubica::matrix_io {

enum class Format { MatrixMarket, Alist };
std::optional<Format> parse_format(std::string_view s);

void write_matrix_market(std::ostream& out, const BitMatrix& m);
void write_alist(std::ostream& out, const BitMatrix& m);
// Throw std::runtime_error on malformed input.
BitMatrix read_matrix_market(std::istream& in);
BitMatrix read_alist(std::istream& in);

// Throw Error{Io} naming the path.
void write_file(const std::filesystem::path& path, const BitMatrix& m, Format f);
BitMatrix read_file(const std::filesystem::path& path, Format f);

}  // namespace cubica::matrix_io
