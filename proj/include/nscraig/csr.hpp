#pragma once

#include <cstddef>
#include <vector>

#include "nscraig/types.hpp"

namespace nscraig {

/// Sparse matrix in compressed-sparse-row form with owned storage.
/// Within each row the column indices are strictly increasing and no
/// duplicate entries are stored.
struct SparseMatrixCSR {
  std::size_t nrows = 0;
  std::size_t ncols = 0;
  std::vector<std::size_t> row_offsets;  // length nrows + 1
  std::vector<std::size_t> col_indices;
  std::vector<double> values;

  std::size_t nnz() const { return values.size(); }

  /// Throws std::invalid_argument if the CSR invariants are violated.
  void check_invariants() const;

  static SparseMatrixCSR identity(std::size_t n);
  static SparseMatrixCSR diagonal(const Vec& d);
};

/// Coordinate-format accumulator; build() sorts, merges duplicates by
/// summing and (optionally) drops entries that cancelled to exact zero.
class CooBuilder {
 public:
  CooBuilder(std::size_t nrows, std::size_t ncols) : nrows_(nrows), ncols_(ncols) {}

  void add(std::size_t row, std::size_t col, double value);

  SparseMatrixCSR build(bool drop_zeros = false) const;

 private:
  struct Entry {
    std::size_t row, col;
    double value;
  };
  std::size_t nrows_, ncols_;
  std::vector<Entry> entries_;
};

/// Returns Amat * x.
Vec spmv(const SparseMatrixCSR& Amat, const Vec& x);

/// Returns Amat^T * x.
Vec spmv_t(const SparseMatrixCSR& Amat, const Vec& x);

/// x^T M y (M square).
double m_inner(const SparseMatrixCSR& M, const Vec& x, const Vec& y);

/// sqrt(x^T M x); throws std::domain_error if x^T M x < 0, which violates
/// the positive-definiteness assumption on M.
double m_norm(const SparseMatrixCSR& M, const Vec& x);

}  // namespace nscraig
