#include "nscraig/validate.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "nscraig/rng.hpp"
#include "nscraig/vector_ops.hpp"

namespace nscraig {

namespace {

Eigen::MatrixXd to_eigen_dense(const SparseMatrixCSR& s) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(s.nrows),
                                            static_cast<Eigen::Index>(s.ncols));
  for (std::size_t r = 0; r < s.nrows; ++r)
    for (std::size_t k = s.row_offsets[r]; k < s.row_offsets[r + 1]; ++k)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(s.col_indices[k])) += s.values[k];
  return m;
}

// sigma_min / sigma_max of A without the SVD: power iteration on A^T A for
// the top, inverse (shifted) power iteration for the bottom.
void singular_range_iterative(const SparseMatrixCSR& A, SeededRng& rng, double& smin,
                              double& smax) {
  const std::size_t n = A.ncols;
  Eigen::MatrixXd ata = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(n));
  {
    const Eigen::MatrixXd ad = to_eigen_dense(A);
    ata = ad.transpose() * ad;
  }
  Eigen::VectorXd x(n);
  for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = rng.normal();
  x.normalize();
  double lam_max = 0.0;
  for (int it = 0; it < 200; ++it) {
    x = ata * x;
    lam_max = x.norm();
    if (lam_max == 0.0) break;
    x /= lam_max;
  }
  smax = std::sqrt(lam_max);

  const double shift = 1e-14 * (lam_max > 0 ? lam_max : 1.0);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(
      ata + shift * Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(n)));
  for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = rng.normal();
  x.normalize();
  double inv_lam = 0.0;
  for (int it = 0; it < 200; ++it) {
    x = lu.solve(x);
    inv_lam = x.norm();
    if (inv_lam == 0.0) break;
    x /= inv_lam;
  }
  const double lam_min = inv_lam > 0.0 ? 1.0 / inv_lam : 0.0;
  smin = std::sqrt(std::max(0.0, lam_min - shift));
}

}  // namespace

ValidationReport validate_system(const SaddleSystem& sys, std::size_t samples,
                                 std::uint64_t seed, std::size_t dense_threshold) {
  ValidationReport report;
  report.samples = samples;
  SeededRng rng(seed);

  double min_q = std::numeric_limits<double>::infinity();
  Vec x(sys.m_dim());
  for (std::size_t s = 0; s < samples; ++s) {
    for (double& v : x) v = rng.normal();
    const double nx = norm2(x);
    if (nx == 0.0) continue;
    scal(1.0 / nx, x);
    min_q = std::min(min_q, m_inner(sys.M, x, x));
  }
  report.min_quadratic_form = min_q;
  report.m_positive = min_q > 0.0;

  if (sys.n_dim() <= dense_threshold) {
    const Eigen::MatrixXd ad = to_eigen_dense(sys.A);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(ad);
    const auto& sv = svd.singularValues();
    report.max_singular_value = sv.size() ? sv(0) : 0.0;
    report.min_singular_value = sv.size() ? sv(sv.size() - 1) : 0.0;
  } else {
    singular_range_iterative(sys.A, rng, report.min_singular_value, report.max_singular_value);
  }
  report.rank_threshold = static_cast<double>(std::max(sys.m_dim(), sys.n_dim())) *
                          std::numeric_limits<double>::epsilon() * report.max_singular_value;
  report.a_full_rank = report.min_singular_value > report.rank_threshold;
  return report;
}

}  // namespace nscraig
