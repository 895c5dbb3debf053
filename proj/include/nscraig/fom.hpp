#pragma once

#include <cstddef>
#include <vector>

#include "nscraig/orthogonalize.hpp"
#include "nscraig/schur.hpp"
#include "nscraig/types.hpp"

namespace nscraig {

/// Arnoldi data: orthonormal basis plus the Hessenberg columns
/// (column j holds h_{1,j}..h_{j+1,j}, the subdiagonal entry last).
struct ArnoldiBasis {
  std::vector<Vec> vectors;
  std::vector<std::vector<double>> hess_columns;
};

struct FomResult {
  Vec p;
  std::vector<double> residual_history;  // FOM residual norms, one per iteration
  std::size_t iterations = 0;
  bool converged = false;
  std::size_t peak_basis_scalars = 0;
  std::vector<Vec> iterates;  // per-iteration solutions (capture mode only)
};

/// Full Orthogonalization Method on the implicit Schur operator. The caller
/// passes rhs = -b so that the returned iterate solves S p = -b directly.
/// Throws FomBreakdownError if a Hessenberg solve is singular (ruled out for
/// positive definite M; indicates an invalid input).
FomResult fom_solve(const SchurOperator& op, const Vec& rhs, double tol, std::size_t maxit,
                    Orthogonalization orth = Orthogonalization::mgs,
                    bool capture_iterates = false);

}  // namespace nscraig
