#pragma once

#include "nscraig/factorization.hpp"
#include "nscraig/problem.hpp"
#include "nscraig/types.hpp"

namespace nscraig {

/// Random sparse system with a structurally guaranteed positive definite M:
/// a diagonally dominant symmetric part plus skew_scale times a random skew
/// part (which never touches x^T M x), and an A whose columns each own a
/// unique dominant row. Deterministic in spec.seed.
SaddleSystem gen_synthetic(const ProblemSpec& spec);

/// Finite-difference convection-diffusion analogue of a linearized
/// incompressible-flow step: M = blockdiag(F, F) with F = nu * (5-point
/// Laplacian) + central-difference convection by the constant wind (skew
/// part), and A a two-component discrete gradient onto a coarser
/// piecewise-constant pressure grid with one pressure DOF dropped to remove
/// the constant null mode. wind = 0 gives an exactly symmetric M.
SaddleSystem gen_oseen_fd(const ProblemSpec& spec);

struct ReducedRhs {
  Vec b;   // b2 - A^T w0
  Vec w0;  // M^{-1} b1
  bool degenerate = false;  // ||b|| vanished; the reduced system is trivial
};

/// Reduces the general form [M, A; A^T, 0][w; p] = [b1; b2] to the zero-first-
/// block form: solving with the returned b yields u with w = u + w0.
ReducedRhs reduce_general_form(const SparseMatrixCSR& M, const SparseMatrixCSR& A, const Vec& b1,
                               const Vec& b2);
ReducedRhs reduce_general_form(const SparseFactorization& fact, const SparseMatrixCSR& A,
                               const Vec& b1, const Vec& b2);

}  // namespace nscraig
