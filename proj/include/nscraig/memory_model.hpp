#pragma once

#include <cstddef>

namespace nscraig {

enum class SolverKind { gkb, gmres };

/// Stored scalars: gkb uses m + n (iter + 1); a textbook restarted GMRES on
/// the (m+n)-dimensional system uses (m + n)(k_max + 1).
std::size_t memory_estimate(SolverKind kind, std::size_t iterations_or_kmax, std::size_t m,
                            std::size_t n);

/// Restart length that matches GMRES memory to a gkb run of `iter` steps:
/// floor(iter * n / (m + n)). Throws std::invalid_argument when the budget
/// admits no GMRES iterations (result 0).
std::size_t compute_restart_kmax(std::size_t iter, std::size_t m, std::size_t n);

}  // namespace nscraig
