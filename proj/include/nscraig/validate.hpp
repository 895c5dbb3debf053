#pragma once

#include <cstddef>
#include <cstdint>

#include "nscraig/problem.hpp"

namespace nscraig {

struct ValidationReport {
  double min_quadratic_form = 0.0;  // min over sampled unit x of x^T M x
  double min_singular_value = 0.0;  // smallest singular value of A
  double max_singular_value = 0.0;
  double rank_threshold = 0.0;      // sigma_min must exceed this for full rank
  bool m_positive = false;
  bool a_full_rank = false;
  std::size_t samples = 0;
};

/// Structural checks on a system: sampled positivity of the quadratic form
/// of M and the numerical column rank of A (dense SVD up to dense_threshold
/// columns, shifted inverse power iteration on A^T A beyond that).
/// Verdicts, not exceptions.
ValidationReport validate_system(const SaddleSystem& sys, std::size_t samples,
                                 std::uint64_t seed = 0x5eedULL,
                                 std::size_t dense_threshold = 200);

}  // namespace nscraig
