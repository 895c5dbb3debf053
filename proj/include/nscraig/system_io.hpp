#pragma once

#include <string>

#include "nscraig/problem.hpp"

namespace nscraig {

/// Directory layout: M.mtx, A.mtx, b.mtx, meta.json. Load checks the
/// dimensions across the three files and reports which pair disagrees.
SaddleSystem load_system(const std::string& dir);

/// Writes the system plus a meta.json recording the ProblemSpec fields.
void save_system(const std::string& dir, const SaddleSystem& sys, const ProblemSpec& spec);

/// Reads meta.json back into a ProblemSpec (kind "file" with defaults when
/// the file is absent).
ProblemSpec load_meta(const std::string& dir);

}  // namespace nscraig
