#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nscraig {

using Vec = std::vector<double>;

/// Thrown by factorize() when elimination hits an exactly singular pivot.
class FactorizationError : public std::runtime_error {
 public:
  FactorizationError(std::string msg, std::ptrdiff_t pivot)
      : std::runtime_error(std::move(msg)), pivot_index_(pivot) {}

  /// Index of the failing pivot row/column, or -1 if the backend did not report one.
  std::ptrdiff_t pivot_index() const noexcept { return pivot_index_; }

 private:
  std::ptrdiff_t pivot_index_;
};

/// Thrown on malformed Matrix Market input; carries the offending line.
class MatrixMarketError : public std::runtime_error {
 public:
  MatrixMarketError(const std::string& path, long line, const std::string& what)
      : std::runtime_error(path + ":" + std::to_string(line) + ": " + what),
        line_(line) {}

  long line() const noexcept { return line_; }

 private:
  long line_;
};

/// Thrown when the FOM Hessenberg solve is singular (cannot happen for
/// positive definite M; indicates an invalid input system).
class FomBreakdownError : public std::runtime_error {
 public:
  FomBreakdownError(std::size_t step)
      : std::runtime_error("FOM breakdown: singular Hessenberg solve at step " +
                           std::to_string(step)),
        step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace nscraig
