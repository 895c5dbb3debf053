#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nscraig/csr.hpp"
#include "nscraig/factorization.hpp"
#include "nscraig/gkb.hpp"
#include "nscraig/types.hpp"

namespace nscraig {

enum class StoppingCriterion { residual, error_estimate };
enum class Termination { converged, maxit_reached, breakdown };

std::string to_string(Termination t);

struct SolverConfig {
  double tol = 1e-3;
  std::size_t maxit = 1000;
  StoppingCriterion criterion = StoppingCriterion::residual;
  std::size_t delay_d = 5;
  Orthogonalization orthogonalization = Orthogonalization::mgs;

  void validate() const;  // throws std::invalid_argument
};

struct SolveReport {
  Vec u;
  Vec p;
  std::size_t iterations = 0;
  /// ||b - A^T u_k||_2 from the beta_{k+1}|chi_k| recursion, one entry per iteration.
  std::vector<double> residual_history;
  /// Relative squared energy-error estimates, first entry at iteration delay_d.
  std::vector<double> error_estimate_history;
  Termination termination = Termination::converged;
  std::size_t memory_estimate = 0;  // m + n (iterations + 1) stored scalars
  bool estimate_sign_anomaly = false;
  bool chi_overflowed = false;
};

/// Per-iteration data that the plain solver deliberately avoids computing;
/// only populated by the validated entry point.
struct ValidationTrace {
  std::vector<Vec> p_iterates;
  std::vector<Vec> u_iterates;
  std::vector<double> explicit_residuals;       // ||b - A^T u_k||_2 recomputed
  std::vector<double> hessenberg_route_diff;    // rel. diff of the two recovery routes for p
  NsGkbState final_state;                       // retains the left basis V
};

/// Runs the decomposition until the selected stopping criterion, maxit or a
/// breakdown, then recovers (u, p) exactly once.
SolveReport nscraig_solve(const SparseMatrixCSR& M, const SparseMatrixCSR& A, const Vec& b,
                          const SolverConfig& cfg);

/// Same, reusing an existing factorization of M (M itself is not needed:
/// products M v are maintained by the recurrence).
SolveReport nscraig_solve(const SparseFactorization& fact, const SparseMatrixCSR& A, const Vec& b,
                          const SolverConfig& cfg);

/// Validation run: retains the left basis and records per-iteration iterates,
/// explicitly recomputed residuals and the Hessenberg-route cross-check.
SolveReport nscraig_solve_validated(const SparseFactorization& fact, const SparseMatrixCSR& A,
                                    const Vec& b, const SolverConfig& cfg,
                                    ValidationTrace& trace);

}  // namespace nscraig
