#pragma once

#include <cstddef>

#include "nscraig/csr.hpp"
#include "nscraig/factorization.hpp"
#include "nscraig/types.hpp"

namespace nscraig {

/// The Schur complement S = A^T M^{-1} A as an implicit n x n operator;
/// S is never formed. Holds non-owning references.
struct SchurOperator {
  const SparseMatrixCSR* A = nullptr;
  const SparseFactorization* fact = nullptr;

  std::size_t dim() const { return A->ncols; }
};

/// A^T (M^{-1} (A x)).
Vec schur_apply(const SchurOperator& op, const Vec& x);

}  // namespace nscraig
