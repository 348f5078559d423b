#pragma once

#include "circrob/core.hpp"

#include <filesystem>
#include <iosfwd>
#include <string_view>

namespace circrob {

/// Reads a matrix in either text layout:
///   full:           n, then n rows of n numbers;
///   lower triangle: n, then n-1 rows where row i (from 1) holds d(i,0..i-1).
/// The layout is detected from the first data row. With `csv` set, commas
/// act as separators. Throws InputError naming the offending row/column.
DissimilarityMatrix<double> load_matrix(std::istream& in, double epsilon = 0.0, bool csv = false);

/// As above; the CSV variant is selected by a ".csv" extension.
DissimilarityMatrix<double> load_matrix_file(const std::filesystem::path& path,
                                             double epsilon = 0.0);

/// Full layout, 17 significant digits so values read back exactly.
void write_matrix(std::ostream& out, const DissimilarityMatrix<double>& d);

/// "i0,i1,..." into an order on n points. Whitespace around entries is allowed.
CircularOrder parse_order(std::string_view text, Index n);

/// Comma-separated indices of the canonical form.
std::string format_order(const CircularOrder& order);

}  // namespace circrob
