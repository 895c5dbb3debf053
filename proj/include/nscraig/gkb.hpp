#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nscraig/csr.hpp"
#include "nscraig/dense.hpp"
#include "nscraig/factorization.hpp"
#include "nscraig/orthogonalize.hpp"
#include "nscraig/structured.hpp"
#include "nscraig/types.hpp"

namespace nscraig {

struct GkbOptions {
  Orthogonalization orth = Orthogonalization::mgs;
  /// Validation mode: keep every left vector v_1..v_k (the solver itself
  /// only ever needs the latest one).
  bool retain_left_basis = false;
  /// beta_{k+1} <= breakdown_rel_tol * beta_1 declares a lucky breakdown.
  double breakdown_rel_tol = 1e-13;
};

/// Evolving state of the nonsymmetric Golub-Kahan decomposition
///
///   A Q_k = M V_k B_k,          V_k^T M V_k = L_k (unit lower triangular),
///   A^T V_k = Q_k H_k + beta_{k+1} q_{k+1} e_k^T,   Q_k^T Q_k = I_k.
///
/// A state "at step k" holds q_1..q_k, v_k, alpha_1..alpha_k, beta_2..beta_k,
/// chi_1..chi_k, the k columns of H and, already computed ahead, beta_{k+1}
/// together with the candidate q_{k+1}. The strictly upper part of L^T is
/// derived column by column from B^T L^T = H, so V never has to be stored.
struct NsGkbState {
  std::size_t k = 0;
  double beta1 = 0.0;

  std::vector<Vec> Q;   // right basis q_1..q_k (length n each)
  Vec q_next;           // q_{k+1}; empty once the decomposition cannot continue
  Vec v_latest;         // v_k (length m)
  Vec mv_latest;        // M v_k, maintained by recurrence (M v_k = t_k / alpha_k)

  BidiagonalUpper B;    // alpha_1..alpha_k, beta_2..beta_k
  double beta_next = 0.0;  // beta_{k+1}
  HessenbergColumns H;  // theta columns 1..k, subdiagonal shared with B
  UnitLowerTriangular L;  // L_k from the B^{-T} H recurrence

  std::vector<double> chi;  // chi_1 = beta_1/alpha_1, chi_k = -(beta_k/alpha_k) chi_{k-1}
  // companion log-magnitude/sign form; used once |chi| crosses the overflow guard
  std::vector<double> chi_log;
  std::vector<int> chi_sign;
  bool chi_overflowed = false;

  bool basis_complete = false;        // k reached n, Q spans R^n
  bool estimate_sign_anomaly = false; // a signed estimate sum went negative; magnitude used
  double unit_diag_drift = 0.0;       // max |recovered L diagonal - 1| (orthogonality indicator)

  std::vector<Vec> V;  // retained left basis (validation mode only)
  GkbOptions options;

  std::size_t n() const { return Q.empty() ? 0 : Q.front().size(); }
  std::size_t m() const { return v_latest.size(); }
  bool can_step() const { return !q_next.empty(); }
};

/// Starts the decomposition: beta_1 = ||b||, q_1 = b/beta_1, w = M^{-1} A q_1,
/// alpha_1 = ||w||_M, v_1 = w/alpha_1, chi_1 = beta_1/alpha_1, and the first
/// orthogonalization pass producing beta_2 and the first column of H.
/// Throws std::invalid_argument for b = 0 and std::domain_error when alpha_1
/// degenerates (A q_1 = 0 or positive-definiteness violated numerically).
NsGkbState gkb_init(const SparseFactorization& fact, const SparseMatrixCSR& A, const Vec& b,
                    GkbOptions options = {});

/// Advances the state from step k to step k+1. Requires can_step(); throws
/// std::domain_error on an alpha breakdown (the state is left unchanged at
/// step k so a best-effort solution can still be recovered).
void gkb_step(NsGkbState& state, const SparseFactorization& fact, const SparseMatrixCSR& A);

/// beta_{k+1} |chi_k|; equals ||b - A^T u_k||_2 in exact arithmetic.
double residual_norm(const NsGkbState& state);

/// Delayed energy-norm error estimate xi^2_{k-d} = sum_{i=k-d+1..k} chi_i zeta_i,
/// where the zeta_i come from d back-substitution steps with L_k^T. Absent
/// while k < d. A negative value (possible for nonsymmetric M) is reported
/// as its magnitude with estimate_sign_anomaly set on the state.
std::optional<double> error_estimate(NsGkbState& state, std::size_t d);

/// Relative form: xi^2_{k-d} / sum_{i=1..k} chi_i zeta_i.
std::optional<double> error_estimate_relative(NsGkbState& state, std::size_t d);

/// Recovers (u, p) from the current state via the structured solves
/// z = beta_1 L_k^{-T} B_k^{-T} e_1, y = -B_k^{-1} z, p = Q_k y,
/// u = -M^{-1} A p.
std::pair<Vec, Vec> recover_solution(const NsGkbState& state, const SparseFactorization& fact,
                                     const SparseMatrixCSR& A);

/// Cross-check route through the Hessenberg form of the Schur complement:
/// p = -Q (H B)^{-1} (beta_1 e_1), u = -M^{-1} A p. Validation builds compare
/// this against recover_solution.
std::pair<Vec, Vec> recover_solution_hessenberg(const NsGkbState& state,
                                                const SparseFactorization& fact,
                                                const SparseMatrixCSR& A);

/// H_k B_k, the leading k x k Hessenberg section of Q^T S Q.
DenseMatrix schur_hessenberg_product(const NsGkbState& state);

/// Energy norm of the primal error after k of the state's steps,
/// sqrt(x_{n-k}^T L_{n-k}^{-T} x_{n-k}); requires a state run to completion
/// (validation use). k = state.k gives 0, k = 0 gives ||u||_M.
double exact_error_energy_norm(const NsGkbState& state, std::size_t k);

/// V_k^T M V_k formed densely from the retained left basis (validation mode).
DenseMatrix left_basis_gram(const NsGkbState& state, const SparseMatrixCSR& M);

/// max_ij |(Q^T Q - I)_ij|, the orthogonality defect of the right basis.
double orthogonality_defect(const NsGkbState& state);

}  // namespace nscraig
