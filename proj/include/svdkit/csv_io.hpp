#ifndef SVDKIT_CSV_IO_HPP
#define SVDKIT_CSV_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "svdkit/dense_matrix.hpp"

namespace svdkit {

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double value);

/// Reads a headerless matrix: one row per line, comma-separated decimals.
/// All rows must have the same width; throws FormatError naming the
/// offending line otherwise.
DenseMatrix read_matrix_csv(std::istream& in);
DenseMatrix read_matrix_csv_file(const std::string& path);

void write_matrix_csv(const DenseMatrix& a, std::ostream& out);
void write_matrix_csv_file(const DenseMatrix& a, const std::string& path);

/// One value per line, same decimal format as matrices.
void write_vector_csv_file(const std::vector<double>& values, const std::string& path);

} // namespace svdkit

#endif
