#include "nscraig/solver.hpp"

#include <cmath>
#include <stdexcept>

#include "nscraig/vector_ops.hpp"

namespace nscraig {

std::string to_string(Termination t) {
  switch (t) {
    case Termination::converged: return "converged";
    case Termination::maxit_reached: return "maxit_reached";
    case Termination::breakdown: return "breakdown";
  }
  return "unknown";
}

void SolverConfig::validate() const {
  if (!(tol > 0.0)) throw std::invalid_argument("config: tol must be > 0");
  if (maxit < 1) throw std::invalid_argument("config: maxit must be >= 1");
  if (delay_d < 1) throw std::invalid_argument("config: delay must be >= 1");
}

namespace {

SolveReport run(const SparseFactorization& fact, const SparseMatrixCSR& A, const Vec& b,
                const SolverConfig& cfg, ValidationTrace* trace) {
  cfg.validate();

  GkbOptions options;
  options.orth = cfg.orthogonalization;
  options.retain_left_basis = trace != nullptr;

  SolveReport report;
  NsGkbState state = gkb_init(fact, A, b, options);
  const double beta1 = state.beta1;

  Termination term = Termination::maxit_reached;
  for (;;) {
    const double res = residual_norm(state);
    report.residual_history.push_back(res);
    const std::optional<double> rel_est = error_estimate_relative(state, cfg.delay_d);
    if (rel_est) report.error_estimate_history.push_back(*rel_est);

    if (trace) {
      auto [u_k, p_k] = recover_solution(state, fact, A);
      auto [u_h, p_h] = recover_solution_hessenberg(state, fact, A);
      const double denom = std::max(norm2(p_k), 1e-300);
      trace->hessenberg_route_diff.push_back(norm2(subtract(p_k, p_h)) / denom);
      trace->explicit_residuals.push_back(norm2(subtract(b, spmv_t(A, u_k))));
      trace->u_iterates.push_back(std::move(u_k));
      trace->p_iterates.push_back(std::move(p_k));
    }

    const bool met = cfg.criterion == StoppingCriterion::residual
                         ? res <= cfg.tol * beta1
                         : (rel_est && *rel_est <= cfg.tol * cfg.tol);
    if (met) {
      term = Termination::converged;
      break;
    }
    if (!state.can_step()) {
      // Lucky breakdown: the residual is still a valid convergence signal.
      term = res <= cfg.tol * beta1 ? Termination::converged : Termination::breakdown;
      break;
    }
    if (state.k >= cfg.maxit) {
      term = Termination::maxit_reached;
      break;
    }
    try {
      gkb_step(state, fact, A);
    } catch (const std::domain_error&) {
      term = Termination::breakdown;
      break;
    }
  }

  auto [u, p] = recover_solution(state, fact, A);
  report.u = std::move(u);
  report.p = std::move(p);
  report.iterations = state.k;
  report.termination = term;
  report.memory_estimate = state.m() + state.n() * (state.k + 1);
  report.estimate_sign_anomaly = state.estimate_sign_anomaly;
  report.chi_overflowed = state.chi_overflowed;
  if (trace) trace->final_state = std::move(state);
  return report;
}

}  // namespace

SolveReport nscraig_solve(const SparseMatrixCSR& M, const SparseMatrixCSR& A, const Vec& b,
                          const SolverConfig& cfg) {
  const SparseFactorization fact = factorize(M);
  return run(fact, A, b, cfg, nullptr);
}

SolveReport nscraig_solve(const SparseFactorization& fact, const SparseMatrixCSR& A, const Vec& b,
                          const SolverConfig& cfg) {
  return run(fact, A, b, cfg, nullptr);
}

SolveReport nscraig_solve_validated(const SparseFactorization& fact, const SparseMatrixCSR& A,
                                    const Vec& b, const SolverConfig& cfg,
                                    ValidationTrace& trace) {
  return run(fact, A, b, cfg, &trace);
}

}  // namespace nscraig
