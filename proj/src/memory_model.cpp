#include "nscraig/memory_model.hpp"

#include <stdexcept>

namespace nscraig {

std::size_t memory_estimate(SolverKind kind, std::size_t iterations_or_kmax, std::size_t m,
                            std::size_t n) {
  switch (kind) {
    case SolverKind::gkb: return m + n * (iterations_or_kmax + 1);
    case SolverKind::gmres: return (m + n) * (iterations_or_kmax + 1);
  }
  throw std::invalid_argument("memory_estimate: unknown solver kind");
}

std::size_t compute_restart_kmax(std::size_t iter, std::size_t m, std::size_t n) {
  if (m < 1 || n < 1 || iter < 1)
    throw std::invalid_argument("compute_restart_kmax: m, n, iter must be >= 1");
  const std::size_t kmax = (iter * n) / (m + n);
  if (kmax == 0)
    throw std::invalid_argument("compute_restart_kmax: memory budget admits no GMRES iterations");
  return kmax;
}

}  // namespace nscraig
