#pragma once

#include <cstddef>
#include <vector>

#include "nscraig/csr.hpp"
#include "nscraig/types.hpp"

namespace nscraig {

/// Small dense row-major matrix for Hessenberg solves, validation
/// cross-checks and test oracles. Not meant for large dimensions.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;  // row-major

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix from_csr(const SparseMatrixCSR& m);

  Vec matvec(const Vec& x) const;
  Vec matvec_t(const Vec& x) const;
  DenseMatrix multiply(const DenseMatrix& other) const;
  DenseMatrix transposed() const;
  double frobenius_norm() const;
};

/// Solves Ax = b by LU with partial pivoting. Throws FactorizationError on a
/// zero pivot (naming the pivot row).
Vec dense_solve(DenseMatrix A, Vec b);

}  // namespace nscraig
