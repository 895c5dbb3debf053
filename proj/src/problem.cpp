#include "nscraig/problem.hpp"

#include <cstdio>
#include <stdexcept>

namespace nscraig {

std::string to_string(ProblemKind k) {
  switch (k) {
    case ProblemKind::synthetic: return "synthetic";
    case ProblemKind::oseen_fd: return "oseen_fd";
    case ProblemKind::file: return "file";
  }
  return "unknown";
}

ProblemKind problem_kind_from_string(const std::string& s) {
  if (s == "synthetic") return ProblemKind::synthetic;
  if (s == "oseen_fd" || s == "oseen") return ProblemKind::oseen_fd;
  if (s == "file") return ProblemKind::file;
  throw std::invalid_argument("unknown problem kind: " + s);
}

std::string problem_digest(const ProblemSpec& spec) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s|%zu|%zu|%zu|%llu|%.17g|%.17g|%.17g|%.17g|%s",
                to_string(spec.kind).c_str(), spec.m, spec.n, spec.grid,
                static_cast<unsigned long long>(spec.seed), spec.nu, spec.wind_x, spec.wind_y,
                spec.skew_scale, spec.path.c_str());
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (const char* c = buf; *c; ++c) {
    hash ^= static_cast<unsigned char>(*c);
    hash *= 0x100000001b3ull;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(hash));
  return out;
}

void SaddleSystem::check_dimensions() const {
  if (M.nrows != M.ncols) throw std::invalid_argument("system: M must be square");
  if (A.nrows != M.nrows) throw std::invalid_argument("system: A row count must match M");
  if (A.ncols < 1 || A.ncols > A.nrows)
    throw std::invalid_argument("system: require m >= n >= 1");
  if (b.size() != A.ncols) throw std::invalid_argument("system: b must have n entries");
  if (b1 && b1->size() != M.nrows)
    throw std::invalid_argument("system: b1 must have m entries");
}

}  // namespace nscraig
