#include "nscraig/fom.hpp"

#include <cmath>
#include <stdexcept>

#include "nscraig/dense.hpp"
#include "nscraig/vector_ops.hpp"

namespace nscraig {

namespace {

// Square H_j from the Arnoldi columns (upper entries + subdiagonal).
DenseMatrix square_hessenberg(const ArnoldiBasis& basis, std::size_t j) {
  DenseMatrix H(j, j);
  for (std::size_t c = 0; c < j; ++c) {
    const auto& col = basis.hess_columns[c];
    const std::size_t upper = col.size() - 1;  // entries on/above the diagonal
    for (std::size_t r = 0; r < upper && r < j; ++r) H.at(r, c) = col[r];
    if (c + 1 < j) H.at(c + 1, c) = col[upper];
  }
  return H;
}

Vec combine(const std::vector<Vec>& vectors, const Vec& y) {
  Vec x(vectors.front().size(), 0.0);
  for (std::size_t i = 0; i < y.size(); ++i) axpy(y[i], vectors[i], x);
  return x;
}

}  // namespace

FomResult fom_solve(const SchurOperator& op, const Vec& rhs, double tol, std::size_t maxit,
                    Orthogonalization orth, bool capture_iterates) {
  if (rhs.size() != op.dim()) throw std::invalid_argument("fom_solve: dimension mismatch");
  FomResult result;
  const std::size_t n = op.dim();
  const double beta = norm2(rhs);
  if (beta == 0.0) {
    result.p.assign(n, 0.0);
    result.converged = true;
    return result;
  }

  ArnoldiBasis basis;
  basis.vectors.push_back(scaled(rhs, 1.0 / beta));
  result.peak_basis_scalars = n;

  Vec y;
  for (std::size_t j = 1; j <= maxit; ++j) {
    Vec w = schur_apply(op, basis.vectors[j - 1]);
    std::vector<double> h = orthogonalize_against(basis.vectors, w, orth);
    const double hnext = norm2(w);
    h.push_back(hnext);
    basis.hess_columns.push_back(h);

    Vec e1(j, 0.0);
    e1[0] = beta;
    try {
      y = dense_solve(square_hessenberg(basis, j), e1);
    } catch (const FactorizationError&) {
      throw FomBreakdownError(j);
    }
    const double res = hnext * std::fabs(y[j - 1]);
    result.residual_history.push_back(res);
    result.iterations = j;
    if (capture_iterates) result.iterates.push_back(combine(basis.vectors, y));

    if (res <= tol * beta) {
      result.converged = true;
      break;
    }
    // Lucky breakdown or full basis: the Galerkin solution is exact in span.
    if (hnext <= 1e-13 * beta || j >= n) break;

    basis.vectors.push_back(scaled(w, 1.0 / hnext));
    result.peak_basis_scalars = std::max(result.peak_basis_scalars, basis.vectors.size() * n);
  }

  result.p = combine(basis.vectors, y);
  return result;
}

}  // namespace nscraig
