#pragma once

#include <vector>

#include "nscraig/types.hpp"
#include "nscraig/vector_ops.hpp"

namespace nscraig {

/// Modified Gram-Schmidt, optionally with a second pass for vectors that
/// lose orthogonality in long recurrences.
enum class Orthogonalization { mgs, mgs_twice };

/// Orthogonalizes g in place against all basis vectors; returns the
/// accumulated projection coefficients basis^T g (summed over passes).
inline std::vector<double> orthogonalize_against(const std::vector<Vec>& basis, Vec& g,
                                                 Orthogonalization orth) {
  std::vector<double> coeffs(basis.size(), 0.0);
  const int passes = orth == Orthogonalization::mgs_twice ? 2 : 1;
  for (int pass = 0; pass < passes; ++pass) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const double c = dot(basis[j], g);
      coeffs[j] += c;
      axpy(-c, basis[j], g);
    }
  }
  return coeffs;
}

}  // namespace nscraig
