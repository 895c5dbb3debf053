#include "nscraig/structured.hpp"

#include <stdexcept>

namespace nscraig {

DenseMatrix BidiagonalUpper::to_dense() const {
  const std::size_t k = dim();
  DenseMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m.at(i, i) = alphas[i];
  for (std::size_t i = 0; i + 1 < k && i < betas.size(); ++i) m.at(i, i + 1) = betas[i];
  return m;
}

DenseMatrix HessenbergColumns::to_dense() const {
  const std::size_t k = dim();
  DenseMatrix m(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < columns[j].size(); ++i) m.at(i, j) = columns[j][i];
    if (j + 1 < k) m.at(j + 1, j) = betas[j];
  }
  return m;
}

void UnitLowerTriangular::append_row(const std::vector<double>& row) {
  if (row.size() != dim)
    throw std::invalid_argument("unit_lower: new row must have `dim` strictly-lower entries");
  strict_lower.insert(strict_lower.end(), row.begin(), row.end());
  ++dim;
}

DenseMatrix UnitLowerTriangular::to_dense() const {
  DenseMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m.at(i, i) = 1.0;
    for (std::size_t j = 0; j < i; ++j) m.at(i, j) = at(i, j);
  }
  return m;
}

Vec solve_bidiag_transpose(const BidiagonalUpper& B, const Vec& rhs) {
  const std::size_t k = B.dim();
  if (rhs.size() != k) throw std::invalid_argument("solve_bidiag_transpose: dimension mismatch");
  Vec x(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    if (B.alphas[i] == 0.0)
      throw std::domain_error("solve_bidiag_transpose: zero diagonal entry alpha_" +
                              std::to_string(i + 1));
    double s = rhs[i];
    if (i > 0 && i - 1 < B.betas.size()) s -= B.betas[i - 1] * x[i - 1];
    x[i] = s / B.alphas[i];
  }
  return x;
}

Vec solve_bidiag(const BidiagonalUpper& B, const Vec& rhs) {
  const std::size_t k = B.dim();
  if (rhs.size() != k) throw std::invalid_argument("solve_bidiag: dimension mismatch");
  Vec x(k, 0.0);
  for (std::size_t ii = k; ii-- > 0;) {
    if (B.alphas[ii] == 0.0)
      throw std::domain_error("solve_bidiag: zero diagonal entry alpha_" + std::to_string(ii + 1));
    double s = rhs[ii];
    if (ii < B.betas.size()) s -= B.betas[ii] * x[ii + 1];
    x[ii] = s / B.alphas[ii];
  }
  return x;
}

Vec solve_unit_lower_transpose(const UnitLowerTriangular& L, const Vec& rhs, std::size_t steps) {
  const std::size_t k = L.dim;
  if (rhs.size() != k) throw std::invalid_argument("solve_unit_lower_transpose: dimension mismatch");
  if (steps > k)
    throw std::invalid_argument("solve_unit_lower_transpose: steps exceeds dimension");
  // L^T(i,j) = L(j,i); unit diagonal, so no division is needed.
  Vec tail(steps, 0.0);
  for (std::size_t t = 0; t < steps; ++t) {
    const std::size_t i = k - 1 - t;
    double s = rhs[i];
    for (std::size_t j = i + 1; j < k; ++j) s -= L.at(j, i) * tail[j - (k - steps)];
    tail[i - (k - steps)] = s;
  }
  return tail;
}

}  // namespace nscraig
