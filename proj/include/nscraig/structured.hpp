#pragma once

#include <cstddef>
#include <vector>

#include "nscraig/dense.hpp"
#include "nscraig/types.hpp"

namespace nscraig {

/// Upper bidiagonal B_k: alphas on the diagonal, betas on the superdiagonal.
/// Grows by one alpha (and one beta from dimension 2 on) per step.
struct BidiagonalUpper {
  std::vector<double> alphas;  // alpha_1 .. alpha_k
  std::vector<double> betas;   // beta_2 .. beta_k (size k-1)

  std::size_t dim() const { return alphas.size(); }
  DenseMatrix to_dense() const;
};

/// Upper Hessenberg H_k stored by columns: column j holds the j entries on
/// and above the diagonal; the subdiagonal is the shared beta sequence of
/// the bidiagonal factor.
struct HessenbergColumns {
  std::vector<std::vector<double>> columns;  // column j (1-based) has j entries
  std::vector<double> betas;                 // beta_2 .. beta_k (subdiagonal)

  std::size_t dim() const { return columns.size(); }
  DenseMatrix to_dense() const;
};

/// Unit lower triangular L: only the strictly-lower entries are stored,
/// packed row by row (row i has i entries, 0-based).
struct UnitLowerTriangular {
  std::vector<double> strict_lower;
  std::size_t dim = 0;

  /// L(i,j) including the implicit unit diagonal; requires i >= j.
  double at(std::size_t i, std::size_t j) const {
    return i == j ? 1.0 : strict_lower[i * (i - 1) / 2 + j];
  }

  /// Appends row `dim` (its dim strictly-lower entries).
  void append_row(const std::vector<double>& row);

  DenseMatrix to_dense() const;
};

/// Solves B^T x = rhs by forward substitution.
Vec solve_bidiag_transpose(const BidiagonalUpper& B, const Vec& rhs);

/// Solves B x = rhs by back substitution.
Vec solve_bidiag(const BidiagonalUpper& B, const Vec& rhs);

/// Back substitution with the unit upper triangular L^T, starting from the
/// last row; returns only the last `steps` entries of the solution of
/// L^T x = rhs (they depend on nothing above them).
Vec solve_unit_lower_transpose(const UnitLowerTriangular& L, const Vec& rhs, std::size_t steps);

}  // namespace nscraig
