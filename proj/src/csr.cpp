#include "nscraig/csr.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nscraig {

void SparseMatrixCSR::check_invariants() const {
  if (row_offsets.size() != nrows + 1)
    throw std::invalid_argument("csr: row_offsets must have nrows+1 entries");
  if (row_offsets.front() != 0 || row_offsets.back() != values.size())
    throw std::invalid_argument("csr: row_offsets must start at 0 and end at nnz");
  if (col_indices.size() != values.size())
    throw std::invalid_argument("csr: col_indices/values length mismatch");
  for (std::size_t r = 0; r < nrows; ++r) {
    if (row_offsets[r] > row_offsets[r + 1])
      throw std::invalid_argument("csr: row_offsets must be nondecreasing");
    for (std::size_t k = row_offsets[r]; k < row_offsets[r + 1]; ++k) {
      if (col_indices[k] >= ncols)
        throw std::invalid_argument("csr: column index out of range");
      if (k > row_offsets[r] && col_indices[k] <= col_indices[k - 1])
        throw std::invalid_argument("csr: column indices must be strictly increasing per row");
    }
  }
}

SparseMatrixCSR SparseMatrixCSR::identity(std::size_t n) {
  SparseMatrixCSR m;
  m.nrows = m.ncols = n;
  m.row_offsets.resize(n + 1);
  m.col_indices.resize(n);
  m.values.assign(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    m.row_offsets[i] = i;
    m.col_indices[i] = i;
  }
  m.row_offsets[n] = n;
  return m;
}

SparseMatrixCSR SparseMatrixCSR::diagonal(const Vec& d) {
  SparseMatrixCSR m = identity(d.size());
  m.values = d;
  return m;
}

void CooBuilder::add(std::size_t row, std::size_t col, double value) {
  if (row >= nrows_ || col >= ncols_)
    throw std::invalid_argument("coo: entry out of range");
  entries_.push_back({row, col, value});
}

SparseMatrixCSR CooBuilder::build(bool drop_zeros) const {
  std::vector<Entry> sorted(entries_);
  std::sort(sorted.begin(), sorted.end(), [](const Entry& a, const Entry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  SparseMatrixCSR m;
  m.nrows = nrows_;
  m.ncols = ncols_;
  m.row_offsets.assign(nrows_ + 1, 0);

  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    double sum = 0.0;
    while (j < sorted.size() && sorted[j].row == sorted[i].row && sorted[j].col == sorted[i].col)
      sum += sorted[j++].value;
    if (!(drop_zeros && sum == 0.0)) {
      m.col_indices.push_back(sorted[i].col);
      m.values.push_back(sum);
      ++m.row_offsets[sorted[i].row + 1];
    }
    i = j;
  }
  for (std::size_t r = 0; r < nrows_; ++r) m.row_offsets[r + 1] += m.row_offsets[r];
  return m;
}

Vec spmv(const SparseMatrixCSR& Amat, const Vec& x) {
  if (x.size() != Amat.ncols)
    throw std::invalid_argument("spmv: dimension mismatch");
  Vec y(Amat.nrows, 0.0);
  for (std::size_t r = 0; r < Amat.nrows; ++r) {
    double s = 0.0;
    for (std::size_t k = Amat.row_offsets[r]; k < Amat.row_offsets[r + 1]; ++k)
      s += Amat.values[k] * x[Amat.col_indices[k]];
    y[r] = s;
  }
  return y;
}

Vec spmv_t(const SparseMatrixCSR& Amat, const Vec& x) {
  if (x.size() != Amat.nrows)
    throw std::invalid_argument("spmv_t: dimension mismatch");
  Vec y(Amat.ncols, 0.0);
  for (std::size_t r = 0; r < Amat.nrows; ++r) {
    const double xr = x[r];
    for (std::size_t k = Amat.row_offsets[r]; k < Amat.row_offsets[r + 1]; ++k)
      y[Amat.col_indices[k]] += Amat.values[k] * xr;
  }
  return y;
}

double m_inner(const SparseMatrixCSR& M, const Vec& x, const Vec& y) {
  if (M.nrows != M.ncols) throw std::invalid_argument("m_inner: M must be square");
  if (x.size() != M.nrows || y.size() != M.nrows)
    throw std::invalid_argument("m_inner: dimension mismatch");
  double s = 0.0;
  for (std::size_t r = 0; r < M.nrows; ++r) {
    double my = 0.0;
    for (std::size_t k = M.row_offsets[r]; k < M.row_offsets[r + 1]; ++k)
      my += M.values[k] * y[M.col_indices[k]];
    s += x[r] * my;
  }
  return s;
}

double m_norm(const SparseMatrixCSR& M, const Vec& x) {
  const double q = m_inner(M, x, x);
  if (q < 0.0)
    throw std::domain_error("m_norm: x^T M x < 0 (M is not positive definite)");
  return std::sqrt(q);
}

}  // namespace nscraig
