#include "nscraig/factorization.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <cctype>
#include <stdexcept>
#include <string>

namespace nscraig {

struct SparseFactorization::Impl {
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  std::size_t dim = 0;
};

SparseFactorization::SparseFactorization() : impl_(std::make_unique<Impl>()) {}
SparseFactorization::~SparseFactorization() = default;
SparseFactorization::SparseFactorization(SparseFactorization&&) noexcept = default;
SparseFactorization& SparseFactorization::operator=(SparseFactorization&&) noexcept = default;

std::size_t SparseFactorization::dim() const { return impl_->dim; }

namespace {

// Eigen appends the failing pivot index to its singularity message; pull it
// out so the error can name the row.
std::ptrdiff_t parse_pivot_index(const std::string& msg) {
  std::size_t i = msg.size();
  while (i > 0 && std::isdigit(static_cast<unsigned char>(msg[i - 1]))) --i;
  if (i == msg.size()) return -1;
  // Eigen reports 1-based positions from its pivot routine.
  return static_cast<std::ptrdiff_t>(std::stoll(msg.substr(i))) - 1;
}

}  // namespace

SparseFactorization factorize(const SparseMatrixCSR& M) {
  if (M.nrows != M.ncols) throw std::invalid_argument("factorize: M must be square");

  using Trip = Eigen::Triplet<double>;
  std::vector<Trip> trips;
  trips.reserve(M.nnz());
  for (std::size_t r = 0; r < M.nrows; ++r)
    for (std::size_t k = M.row_offsets[r]; k < M.row_offsets[r + 1]; ++k)
      trips.emplace_back(static_cast<int>(r), static_cast<int>(M.col_indices[k]), M.values[k]);

  Eigen::SparseMatrix<double> em(static_cast<Eigen::Index>(M.nrows),
                                 static_cast<Eigen::Index>(M.ncols));
  em.setFromTriplets(trips.begin(), trips.end());
  em.makeCompressed();

  SparseFactorization fact;
  fact.impl_->dim = M.nrows;
  fact.impl_->lu.compute(em);
  if (fact.impl_->lu.info() != Eigen::Success) {
    const std::string detail = fact.impl_->lu.lastErrorMessage();
    const std::ptrdiff_t pivot = parse_pivot_index(detail);
    std::string msg = "factorize: singular pivot";
    if (pivot >= 0) msg += " at row " + std::to_string(pivot);
    msg += " (" + detail + ")";
    throw FactorizationError(msg, pivot);
  }
  return fact;
}

Vec apply_inverse(const SparseFactorization& fact, const Vec& x) {
  if (x.size() != fact.dim()) throw std::invalid_argument("apply_inverse: dimension mismatch");
  Eigen::VectorXd ex = Eigen::Map<const Eigen::VectorXd>(x.data(), static_cast<Eigen::Index>(x.size()));
  Eigen::VectorXd ey = fact.impl_->lu.solve(ex);
  return Vec(ey.data(), ey.data() + ey.size());
}

}  // namespace nscraig
