#pragma once

#include <string>

#include "nscraig/csr.hpp"
#include "nscraig/types.hpp"

namespace nscraig {

/// Reads a Matrix Market coordinate file (real, general or symmetric;
/// symmetric storage is expanded). Throws MatrixMarketError with the
/// offending line on malformed input.
SparseMatrixCSR load_matrix_market(const std::string& path);

/// Writes coordinate/real/general with 17 significant digits (bit-exact
/// round trip through load_matrix_market).
void save_matrix_market(const std::string& path, const SparseMatrixCSR& m);

/// Reads a dense vector stored either as an n x 1 array file or as an
/// n x 1 coordinate file.
Vec load_vector_market(const std::string& path);

/// Writes array/real/general, n x 1.
void save_vector_market(const std::string& path, const Vec& v);

}  // namespace nscraig
