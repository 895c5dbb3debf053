#pragma once

#include <cstddef>
#include <memory>

#include "nscraig/csr.hpp"
#include "nscraig/types.hpp"

namespace nscraig {

/// Opaque handle over an LU-style factorization of a square sparse matrix.
/// Computed once by factorize() and reused across all iterations; read-only
/// afterwards, so one factorization may be shared by concurrent solves.
class SparseFactorization {
 public:
  SparseFactorization();
  ~SparseFactorization();
  SparseFactorization(SparseFactorization&&) noexcept;
  SparseFactorization& operator=(SparseFactorization&&) noexcept;
  SparseFactorization(const SparseFactorization&) = delete;
  SparseFactorization& operator=(const SparseFactorization&) = delete;

  std::size_t dim() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;

  friend SparseFactorization factorize(const SparseMatrixCSR& M);
  friend Vec apply_inverse(const SparseFactorization& fact, const Vec& x);
};

/// Factors M once. Throws FactorizationError on a singular pivot (the error
/// names the pivot row) and std::invalid_argument if M is not square.
SparseFactorization factorize(const SparseMatrixCSR& M);

/// Returns y with M y = x to factorization accuracy.
Vec apply_inverse(const SparseFactorization& fact, const Vec& x);

}  // namespace nscraig
