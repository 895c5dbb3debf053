#include "nscraig/gmres.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nscraig/vector_ops.hpp"

namespace nscraig {

Vec block_preconditioned_apply(const BlockPreconditionedSystem& sys, const Vec& x) {
  const std::size_t m = sys.m(), n = sys.n();
  if (x.size() != m + n)
    throw std::invalid_argument("block_preconditioned_apply: dimension mismatch");
  const Vec xu(x.begin(), x.begin() + m);
  const Vec xp(x.begin() + m, x.end());
  const Vec t = apply_inverse(*sys.fact, xu);

  Vec top = spmv(*sys.M, t);
  axpy(1.0, spmv(*sys.A, xp), top);
  const Vec bottom = spmv_t(*sys.A, t);

  Vec out(m + n);
  std::copy(top.begin(), top.end(), out.begin());
  std::copy(bottom.begin(), bottom.end(), out.begin() + m);
  return out;
}

GmresResult gmres_solve(const BlockPreconditionedSystem& sys, double tol, std::size_t maxit,
                        std::optional<std::size_t> restart, Orthogonalization orth) {
  if (restart && *restart < 1) throw std::invalid_argument("gmres_solve: restart must be >= 1");
  if (sys.b.size() != sys.n()) throw std::invalid_argument("gmres_solve: b must have n entries");

  const std::size_t m = sys.m(), n = sys.n(), dim = m + n;
  const std::size_t cycle_len = restart.value_or(maxit);

  Vec rhs(dim, 0.0);
  std::copy(sys.b.begin(), sys.b.end(), rhs.begin() + m);
  const double beta0 = norm2(rhs);

  GmresResult result;
  Vec x(dim, 0.0);  // preconditioned unknown
  if (beta0 == 0.0) {
    result.u.assign(m, 0.0);
    result.p.assign(n, 0.0);
    result.converged = true;
    return result;
  }

  Vec r = rhs;  // residual at x = 0
  std::size_t iters = 0;
  bool first_cycle = true;

  while (iters < maxit && !result.converged && !result.stagnated) {
    if (!first_cycle) ++result.restart_count;
    first_cycle = false;

    const double cycle_start_res = norm2(r);
    if (cycle_start_res <= tol * beta0) {
      result.converged = true;
      break;
    }

    std::vector<Vec> V;
    V.push_back(scaled(r, 1.0 / cycle_start_res));
    result.peak_basis_scalars = std::max(result.peak_basis_scalars, V.size() * dim);

    std::vector<std::vector<double>> R;  // triangularized Hessenberg columns
    std::vector<double> cs, sn;
    std::vector<double> gamma{cycle_start_res};

    std::size_t j = 0;
    bool basis_exhausted = false;
    while (j < cycle_len && iters < maxit) {
      Vec w = block_preconditioned_apply(sys, V[j]);
      std::vector<double> h = orthogonalize_against(V, w, orth);
      double hnext = norm2(w);

      // previously computed rotations, then a new one eliminating hnext
      for (std::size_t i = 0; i + 1 < h.size(); ++i) {
        const double tmp = cs[i] * h[i] + sn[i] * h[i + 1];
        h[i + 1] = -sn[i] * h[i] + cs[i] * h[i + 1];
        h[i] = tmp;
      }
      const double rho = std::hypot(h[j], hnext);
      const double c = rho == 0.0 ? 1.0 : h[j] / rho;
      const double s = rho == 0.0 ? 0.0 : hnext / rho;
      cs.push_back(c);
      sn.push_back(s);
      h[j] = rho;
      R.push_back(h);
      gamma.push_back(-s * gamma[j]);
      gamma[j] *= c;

      ++iters;
      ++j;
      const double res = std::fabs(gamma[j]);
      result.residual_history.push_back(res);

      if (res <= tol * beta0) {
        result.converged = true;
        break;
      }
      if (hnext <= 1e-13 * beta0 || V.size() == dim) {
        basis_exhausted = true;  // happy breakdown; solution exact in span
        break;
      }
      V.push_back(scaled(w, 1.0 / hnext));
      result.peak_basis_scalars = std::max(result.peak_basis_scalars, V.size() * dim);
    }

    // back substitution for y, then update x
    Vec y(j, 0.0);
    for (std::size_t ii = j; ii-- > 0;) {
      double ssum = gamma[ii];
      for (std::size_t l = ii + 1; l < j; ++l) ssum -= R[l][ii] * y[l];
      if (R[ii][ii] == 0.0)
        throw std::runtime_error("gmres_solve: singular least-squares triangle");
      y[ii] = ssum / R[ii][ii];
    }
    for (std::size_t i = 0; i < j; ++i) axpy(y[i], V[i], x);

    r = subtract(rhs, block_preconditioned_apply(sys, x));
    const double true_res = norm2(r);
    result.final_true_residual = true_res;
    if (true_res <= tol * beta0) {
      result.converged = true;
      break;
    }
    if (basis_exhausted) break;
    if (true_res >= cycle_start_res * (1.0 - 1e-14)) result.stagnated = true;
  }

  result.iterations = iters;
  // unwind the right preconditioner, once, at the end
  const Vec xu(x.begin(), x.begin() + m);
  result.u = apply_inverse(*sys.fact, xu);
  result.p.assign(x.begin() + m, x.end());
  return result;
}

}  // namespace nscraig
