#pragma once

#include <cstdint>
#include <string>

namespace nscraig::cli {

// Process exit codes: usage/flag errors are distinct from a solver that ran
// but failed to converge, which is distinct from a breakdown.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_not_converged = 3;
inline constexpr int exit_breakdown = 4;
inline constexpr int exit_io = 5;

struct RunFlags {
  std::string problem = "synthetic";  // synthetic | oseen | file
  std::size_t m = 60;
  std::size_t n = 20;
  std::size_t grid = 12;
  double nu = 0.01;
  double wind_x = 1.0;
  double wind_y = 0.5;
  std::uint64_t seed = 1;
  std::string path;

  std::string solver = "nscraig";  // nscraig | fom | gmres
  double tol = 1e-3;
  std::size_t maxit = 1000;
  std::string stop = "residual";  // residual | error
  std::size_t delay = 5;
  std::string restart = "none";  // none | auto | <int>
  bool validate = false;
  std::string out = ".";
};

/// Generates or loads the system, runs one solver, writes history.csv and
/// summary.json under --out. Returns a process exit code.
int cmd_run(const RunFlags& flags);

/// Runs nscraig, fom, unrestarted gmres and memory-matched restarted gmres
/// on the same system; prints the comparison table and writes compare.json
/// plus the combined histories.csv. Nonzero exit only if nscraig fails.
int cmd_compare(const RunFlags& flags);

/// Writes the generated system as a loadable directory (M.mtx, A.mtx,
/// b.mtx, meta.json).
int cmd_gen(const RunFlags& flags);

}  // namespace nscraig::cli
