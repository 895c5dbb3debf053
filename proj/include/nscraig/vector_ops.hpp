#pragma once

#include <cmath>
#include <cstddef>

#include "nscraig/types.hpp"

namespace nscraig {

inline double dot(const Vec& x, const Vec& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

inline double norm2(const Vec& x) { return std::sqrt(dot(x, x)); }

/// y += a * x
inline void axpy(double a, const Vec& x, Vec& y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

inline void scal(double a, Vec& x) {
  for (double& v : x) v *= a;
}

inline Vec scaled(const Vec& x, double a) {
  Vec y(x);
  scal(a, y);
  return y;
}

inline Vec subtract(const Vec& x, const Vec& y) {
  Vec d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - y[i];
  return d;
}

}  // namespace nscraig
