#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "nscraig/csr.hpp"
#include "nscraig/types.hpp"

namespace nscraig {

enum class ProblemKind { synthetic, oseen_fd, file };

std::string to_string(ProblemKind k);
ProblemKind problem_kind_from_string(const std::string& s);

/// Everything a generator needs; a fixed spec reproduces the system exactly.
struct ProblemSpec {
  ProblemKind kind = ProblemKind::synthetic;
  std::size_t m = 0;           // synthetic: leading-block dimension
  std::size_t n = 0;           // synthetic: coupling-block columns
  std::size_t grid = 0;        // oseen_fd: fine grid cells per side
  std::uint64_t seed = 0;
  double nu = 0.01;            // oseen_fd: viscosity
  double wind_x = 0.0;         // oseen_fd: constant convection field
  double wind_y = 0.0;
  double skew_scale = 1.0;     // synthetic: weight of the skew part of M
  std::string path;            // file: system directory
};

/// FNV-1a hash of the canonical field encoding, as a hex string.
std::string problem_digest(const ProblemSpec& spec);

/// The saddle pair (M, A) with right-hand side(s): the reduced form carries
/// only b (second block); the general form additionally carries b1.
struct SaddleSystem {
  SparseMatrixCSR M;  // m x m, positive definite (nonsymmetric sense)
  SparseMatrixCSR A;  // m x n, full column rank
  Vec b;              // length n
  std::optional<Vec> b1;  // length m, general form only

  std::size_t m_dim() const { return M.nrows; }
  std::size_t n_dim() const { return A.ncols; }

  void check_dimensions() const;  // throws std::invalid_argument
};

}  // namespace nscraig
