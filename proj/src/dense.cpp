#include "nscraig/dense.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace nscraig {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::from_csr(const SparseMatrixCSR& s) {
  DenseMatrix m(s.nrows, s.ncols);
  for (std::size_t r = 0; r < s.nrows; ++r)
    for (std::size_t k = s.row_offsets[r]; k < s.row_offsets[r + 1]; ++k)
      m.at(r, s.col_indices[k]) += s.values[k];
  return m;
}

Vec DenseMatrix::matvec(const Vec& x) const {
  if (x.size() != cols) throw std::invalid_argument("dense matvec: dimension mismatch");
  Vec y(rows, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < cols; ++j) s += at(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

Vec DenseMatrix::matvec_t(const Vec& x) const {
  if (x.size() != rows) throw std::invalid_argument("dense matvec_t: dimension mismatch");
  Vec y(cols, 0.0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) y[j] += at(i, j) * x[i];
  return y;
}

DenseMatrix DenseMatrix::multiply(const DenseMatrix& other) const {
  if (cols != other.rows) throw std::invalid_argument("dense multiply: dimension mismatch");
  DenseMatrix out(rows, other.cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      const double a = at(i, k);
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < other.cols; ++j) out.at(i, j) += a * other.at(k, j);
    }
  return out;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix out(cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.at(j, i) = at(i, j);
  return out;
}

double DenseMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : data) s += v * v;
  return std::sqrt(s);
}

Vec dense_solve(DenseMatrix A, Vec b) {
  if (A.rows != A.cols || b.size() != A.rows)
    throw std::invalid_argument("dense_solve: dimension mismatch");
  const std::size_t n = A.rows;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::fabs(A.at(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::fabs(A.at(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0)
      throw FactorizationError("dense_solve: singular pivot at row " + std::to_string(k),
                               static_cast<std::ptrdiff_t>(k));
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(A.at(k, j), A.at(piv, j));
      std::swap(b[k], b[piv]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = A.at(i, k) / A.at(k, k);
      if (f == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) A.at(i, j) -= f * A.at(k, j);
      b[i] -= f * b[k];
    }
  }
  Vec x(n, 0.0);
  for (std::size_t ii = n; ii-- > 0;) {
    double s = b[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= A.at(ii, j) * x[j];
    x[ii] = s / A.at(ii, ii);
  }
  return x;
}

}  // namespace nscraig
