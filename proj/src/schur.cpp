#include "nscraig/schur.hpp"

#include <stdexcept>

namespace nscraig {

Vec schur_apply(const SchurOperator& op, const Vec& x) {
  if (x.size() != op.A->ncols) throw std::invalid_argument("schur_apply: dimension mismatch");
  return spmv_t(*op.A, apply_inverse(*op.fact, spmv(*op.A, x)));
}

}  // namespace nscraig
