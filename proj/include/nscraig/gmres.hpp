#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nscraig/csr.hpp"
#include "nscraig/factorization.hpp"
#include "nscraig/orthogonalize.hpp"
#include "nscraig/types.hpp"

namespace nscraig {

/// The (m+n)-dimensional saddle operator right-preconditioned with
/// blockdiag(M^{-1}, I); one M^{-1} application per operator apply, which
/// puts each GMRES iteration at cost parity with the bidiagonalization.
struct BlockPreconditionedSystem {
  const SparseMatrixCSR* M = nullptr;
  const SparseMatrixCSR* A = nullptr;
  const SparseFactorization* fact = nullptr;
  Vec b;  // second-block right-hand side (length n); the first block is zero

  std::size_t m() const { return M->nrows; }
  std::size_t n() const { return A->ncols; }
  std::size_t dim() const { return m() + n(); }
};

/// [M, A; A^T, 0] * blockdiag(M^{-1}, I) applied to x.
Vec block_preconditioned_apply(const BlockPreconditionedSystem& sys, const Vec& x);

struct GmresResult {
  Vec u;
  Vec p;
  std::vector<double> residual_history;  // preconditioned (= true) residual norms
  std::size_t iterations = 0;
  bool converged = false;
  bool stagnated = false;  // a full restart cycle produced no residual decrease
  std::size_t restart_count = 0;
  std::size_t peak_basis_scalars = 0;  // instrumented Arnoldi basis storage
  double final_true_residual = 0.0;    // ||rhs - K P^{-1} x|| recomputed at exit
};

/// Textbook MGS-Arnoldi GMRES with Givens-rotation least squares on the
/// right-preconditioned block system. `restart` of nullopt never restarts;
/// otherwise the basis is discarded and rebuilt from the current residual
/// every `restart` iterations. The preconditioner is unwound only once, at
/// the end: u = M^{-1} u~, p = p~.
GmresResult gmres_solve(const BlockPreconditionedSystem& sys, double tol, std::size_t maxit,
                        std::optional<std::size_t> restart = std::nullopt,
                        Orthogonalization orth = Orthogonalization::mgs);

}  // namespace nscraig
