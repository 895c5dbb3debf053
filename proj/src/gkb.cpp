#include "nscraig/gkb.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "nscraig/vector_ops.hpp"

namespace nscraig {

namespace {

constexpr double kChiOverflowGuard = 1e280;
// Scale-free positive-definiteness guard: w^T M w relative to ||w|| ||M w||.
constexpr double kAlphaCosineFloor = 1e-26;

void push_chi(NsGkbState& s, double value, double log_mag, int sign) {
  s.chi.push_back(value);
  s.chi_log.push_back(log_mag);
  s.chi_sign.push_back(sign);
  if (!std::isfinite(value) || std::fabs(value) > kChiOverflowGuard) s.chi_overflowed = true;
}

// alpha_{k} = ||w||_M with M w = t available, so alpha^2 = w^T t without a
// further product with M. Throws when the quadratic form degenerates.
double compute_alpha(const Vec& w, const Vec& t, std::size_t step) {
  const double alpha_sq = dot(w, t);
  const double scale = norm2(w) * norm2(t);
  if (!(alpha_sq > 0.0) || alpha_sq <= kAlphaCosineFloor * scale)
    throw std::domain_error("gkb: alpha_" + std::to_string(step) +
                            " degenerated (w^T M w = " + std::to_string(alpha_sq) +
                            "); positive-definiteness of M violated or A q = 0");
  return std::sqrt(alpha_sq);
}

// Extends L^T with its column k: from B^T L^T = H, entry (i,k) satisfies
// alpha_i L^T(i,k) = H(i,k) - beta_i L^T(i-1,k). The diagonal recovers as 1
// up to orthogonality loss; the drift is tracked as a diagnostic.
void append_l_column(NsGkbState& s, const std::vector<double>& h_col) {
  const std::size_t k = h_col.size();
  std::vector<double> upper(k == 0 ? 0 : k - 1, 0.0);
  double prev = 0.0;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    double num = h_col[i];
    if (i > 0) num -= s.B.betas[i - 1] * prev;
    prev = num / s.B.alphas[i];
    upper[i] = prev;
  }
  double diag = h_col[k - 1];
  if (k >= 2) diag -= s.B.betas[k - 2] * upper[k - 2];
  diag /= s.B.alphas[k - 1];
  s.unit_diag_drift = std::max(s.unit_diag_drift, std::fabs(diag - 1.0));
  s.L.append_row(upper);
}

// Orthogonalizes A^T v_k against the whole right basis, producing column k
// of H, beta_{k+1} and the candidate q_{k+1}. Declares the basis complete at
// k = n: Q then spans R^n and the true remainder is zero regardless of the
// measured norm.
void half_step(NsGkbState& s, const SparseMatrixCSR& A) {
  Vec g = spmv_t(A, s.v_latest);
  std::vector<double> h = orthogonalize_against(s.Q, g, s.options.orth);
  s.beta_next = norm2(g);
  s.H.columns.push_back(h);
  append_l_column(s, h);

  if (s.k >= s.n()) s.basis_complete = true;
  if (s.basis_complete || s.beta_next <= s.options.breakdown_rel_tol * s.beta1) {
    s.q_next.clear();
  } else {
    s.q_next = std::move(g);
    scal(1.0 / s.beta_next, s.q_next);
  }
}

}  // namespace

NsGkbState gkb_init(const SparseFactorization& fact, const SparseMatrixCSR& A, const Vec& b,
                    GkbOptions options) {
  if (A.nrows != fact.dim())
    throw std::invalid_argument("gkb_init: factorization dimension does not match A");
  if (b.size() != A.ncols) throw std::invalid_argument("gkb_init: b must have A.ncols entries");

  NsGkbState s;
  s.options = options;
  s.beta1 = norm2(b);
  if (s.beta1 == 0.0) throw std::invalid_argument("gkb_init: zero right-hand side");

  Vec q1 = scaled(b, 1.0 / s.beta1);
  Vec t = spmv(A, q1);  // = M w
  Vec w = apply_inverse(fact, t);
  const double alpha1 = compute_alpha(w, t, 1);

  s.Q.push_back(std::move(q1));
  s.B.alphas.push_back(alpha1);
  scal(1.0 / alpha1, w);
  s.v_latest = std::move(w);
  scal(1.0 / alpha1, t);
  s.mv_latest = std::move(t);
  push_chi(s, s.beta1 / alpha1, std::log(s.beta1) - std::log(alpha1), 1);
  s.k = 1;
  if (options.retain_left_basis) s.V.push_back(s.v_latest);

  half_step(s, A);
  return s;
}

void gkb_step(NsGkbState& s, const SparseFactorization& fact, const SparseMatrixCSR& A) {
  if (!s.can_step())
    throw std::logic_error("gkb_step: decomposition already terminated (breakdown)");

  // Everything that can fail happens on locals; the state mutates only after.
  Vec q = s.q_next;
  Vec t = spmv(A, q);
  axpy(-s.beta_next, s.mv_latest, t);  // t = A q_{k+1} - beta_{k+1} M v_k = M w
  Vec w = apply_inverse(fact, t);
  const double alpha = compute_alpha(w, t, s.k + 1);

  const double beta = s.beta_next;
  s.Q.push_back(std::move(q));
  s.B.betas.push_back(beta);
  s.H.betas.push_back(beta);
  s.B.alphas.push_back(alpha);
  scal(1.0 / alpha, w);
  s.v_latest = std::move(w);
  scal(1.0 / alpha, t);
  s.mv_latest = std::move(t);

  const double ratio = -beta / alpha;
  push_chi(s, s.chi.back() * ratio, s.chi_log.back() + std::log(beta / alpha),
           -s.chi_sign.back());
  s.k += 1;
  if (s.options.retain_left_basis) s.V.push_back(s.v_latest);

  half_step(s, A);
}

double residual_norm(const NsGkbState& s) {
  if (s.beta_next == 0.0) return 0.0;
  if (!s.chi_overflowed) return s.beta_next * std::fabs(s.chi.back());
  const double lg = std::log(s.beta_next) + s.chi_log.back();
  if (lg > 700.0) return std::numeric_limits<double>::max();
  return std::exp(lg);
}

namespace {

Vec chi_vector(const NsGkbState& s) { return Vec(s.chi.begin(), s.chi.end()); }

}  // namespace

std::optional<double> error_estimate(NsGkbState& s, std::size_t d) {
  if (s.k < d) return std::nullopt;
  const Vec x = chi_vector(s);
  const Vec zeta_tail = solve_unit_lower_transpose(s.L, x, d);
  double xi2 = 0.0;
  for (std::size_t t = 0; t < d; ++t) xi2 += x[s.k - d + t] * zeta_tail[t];
  if (xi2 < 0.0) {
    s.estimate_sign_anomaly = true;
    xi2 = -xi2;
  }
  return xi2;
}

std::optional<double> error_estimate_relative(NsGkbState& s, std::size_t d) {
  if (s.k < d) return std::nullopt;
  const Vec x = chi_vector(s);
  const Vec zeta = solve_unit_lower_transpose(s.L, x, s.k);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < s.k; ++i) {
    const double term = x[i] * zeta[i];
    den += term;
    if (i >= s.k - d) num += term;
  }
  if (num < 0.0 || den < 0.0) s.estimate_sign_anomaly = true;
  den = std::fabs(den);
  if (den < std::numeric_limits<double>::min()) den = std::numeric_limits<double>::min();
  return std::fabs(num) / den;
}

std::pair<Vec, Vec> recover_solution(const NsGkbState& s, const SparseFactorization& fact,
                                     const SparseMatrixCSR& A) {
  const std::size_t k = s.k;
  Vec rhs(k, 0.0);
  rhs[0] = s.beta1;
  const Vec x = solve_bidiag_transpose(s.B, rhs);       // beta_1 B^{-T} e_1
  const Vec z = solve_unit_lower_transpose(s.L, x, k);  // L^{-T} x
  Vec y = solve_bidiag(s.B, z);
  scal(-1.0, y);

  Vec p(s.n(), 0.0);
  for (std::size_t j = 0; j < k; ++j) axpy(y[j], s.Q[j], p);

  Vec u = apply_inverse(fact, spmv(A, p));
  scal(-1.0, u);
  return {std::move(u), std::move(p)};
}

std::pair<Vec, Vec> recover_solution_hessenberg(const NsGkbState& s,
                                                const SparseFactorization& fact,
                                                const SparseMatrixCSR& A) {
  const std::size_t k = s.k;
  Vec rhs(k, 0.0);
  rhs[0] = s.beta1;
  Vec y = dense_solve(schur_hessenberg_product(s), rhs);
  scal(-1.0, y);

  Vec p(s.n(), 0.0);
  for (std::size_t j = 0; j < k; ++j) axpy(y[j], s.Q[j], p);

  Vec u = apply_inverse(fact, spmv(A, p));
  scal(-1.0, u);
  return {std::move(u), std::move(p)};
}

DenseMatrix schur_hessenberg_product(const NsGkbState& s) {
  return s.H.to_dense().multiply(s.B.to_dense());
}

double exact_error_energy_norm(const NsGkbState& s, std::size_t k) {
  if (k > s.k) throw std::invalid_argument("exact_error_energy_norm: k exceeds state step");
  const std::size_t tail = s.k - k;
  if (tail == 0) return 0.0;
  const Vec x = chi_vector(s);
  const Vec t = solve_unit_lower_transpose(s.L, x, tail);
  double val = 0.0;
  for (std::size_t i = 0; i < tail; ++i) val += x[k + i] * t[i];
  if (val < 0.0)
    throw std::domain_error(
        "exact_error_energy_norm: negative squared norm " + std::to_string(val) +
        " (floating-point indefiniteness in L)");
  return std::sqrt(val);
}

DenseMatrix left_basis_gram(const NsGkbState& s, const SparseMatrixCSR& M) {
  if (s.V.size() != s.k)
    throw std::logic_error("left_basis_gram: state was not built with retain_left_basis");
  DenseMatrix gram(s.k, s.k);
  for (std::size_t j = 0; j < s.k; ++j) {
    const Vec mv = spmv(M, s.V[j]);
    for (std::size_t i = 0; i < s.k; ++i) gram.at(i, j) = dot(s.V[i], mv);
  }
  return gram;
}

double orthogonality_defect(const NsGkbState& s) {
  double defect = 0.0;
  for (std::size_t i = 0; i < s.Q.size(); ++i)
    for (std::size_t j = i; j < s.Q.size(); ++j) {
      const double g = dot(s.Q[i], s.Q[j]);
      defect = std::max(defect, std::fabs(g - (i == j ? 1.0 : 0.0)));
    }
  return defect;
}

}  // namespace nscraig
