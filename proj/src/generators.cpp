#include "nscraig/generators.hpp"

#include <cmath>
#include <stdexcept>

#include "nscraig/rng.hpp"
#include "nscraig/vector_ops.hpp"

namespace nscraig {

namespace {

Vec seeded_unit_vector(SeededRng& rng, std::size_t n) {
  Vec b(n);
  for (double& v : b) v = rng.normal();
  const double nb = norm2(b);
  if (nb > 0.0) scal(1.0 / nb, b);
  else b[0] = 1.0;
  return b;
}

}  // namespace

SaddleSystem gen_synthetic(const ProblemSpec& spec) {
  const std::size_t m = spec.m, n = spec.n;
  if (n < 1 || m <= n) throw std::invalid_argument("gen_synthetic: requires m > n >= 1");

  SeededRng rng(spec.seed);
  CooBuilder mb(m, m);

  // Symmetric part: random sparse entries mirrored, with a diagonal that
  // dominates the accumulated absolute row mass (Gershgorin => SPD).
  Vec row_mass(m, 0.0);
  const std::size_t offdiag_per_row = 3;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t e = 0; e < offdiag_per_row; ++e) {
      std::size_t j = rng.below(m);
      if (j == i) j = (j + 1) % m;
      const double v = rng.uniform(-1.0, 1.0) / 2.0;
      mb.add(i, j, v);
      mb.add(j, i, v);
      row_mass[i] += std::fabs(v);
      row_mass[j] += std::fabs(v);
    }
  }
  for (std::size_t i = 0; i < m; ++i) mb.add(i, i, row_mass[i] + 0.5 + rng.uniform01());

  // Skew part: never contributes to x^T M x, so any scale keeps M positive
  // definite while making it arbitrarily nonsymmetric.
  if (spec.skew_scale != 0.0) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t e = 0; e < offdiag_per_row; ++e) {
        std::size_t j = rng.below(m);
        if (j == i) j = (j + 1) % m;
        const double v = spec.skew_scale * rng.uniform(-1.0, 1.0) / 2.0;
        mb.add(i, j, v);
        mb.add(j, i, -v);
      }
    }
  }

  // A: column j owns the dominant entry of row r_j (r_j strictly increasing,
  // hence unique); the small fill per column stays below the dominance gap,
  // so the r_1..r_n row submatrix is strictly column-dominant => full rank.
  CooBuilder ab(m, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t rj = j * m / n;
    ab.add(rj, j, 2.0 + rng.uniform01());
    for (std::size_t e = 0; e < 3; ++e) {
      std::size_t r = rng.below(m);
      while (r == rj) r = rng.below(m);
      ab.add(r, j, rng.uniform(-0.5, 0.5));
    }
  }

  SaddleSystem sys;
  sys.M = mb.build();
  sys.A = ab.build();
  sys.b = seeded_unit_vector(rng, n);
  sys.check_dimensions();
  return sys;
}

SaddleSystem gen_oseen_fd(const ProblemSpec& spec) {
  const std::size_t g = spec.grid;
  if (g < 3) throw std::invalid_argument("gen_oseen_fd: grid must be >= 3");
  if (!(spec.nu > 0.0)) throw std::invalid_argument("gen_oseen_fd: nu must be > 0");

  const std::size_t nvx = g - 1;   // interior nodes per direction
  const std::size_t nv = nvx * nvx;
  const std::size_t m = 2 * nv;
  const double h = 1.0 / static_cast<double>(g);
  const double diff = spec.nu / (h * h);
  const double cwx = spec.wind_x / (2.0 * h);
  const double cwy = spec.wind_y / (2.0 * h);

  const auto node = [nvx](std::size_t i, std::size_t j) { return (j - 1) * nvx + (i - 1); };

  // One scalar convection-diffusion block; M repeats it for both velocity
  // components. Zero-wind coefficients are exactly symmetric.
  CooBuilder mb(m, m);
  for (std::size_t comp = 0; comp < 2; ++comp) {
    const std::size_t base = comp * nv;
    for (std::size_t j = 1; j <= nvx; ++j) {
      for (std::size_t i = 1; i <= nvx; ++i) {
        const std::size_t row = base + node(i, j);
        mb.add(row, row, 4.0 * diff);
        if (i > 1) mb.add(row, base + node(i - 1, j), -diff - cwx);
        if (i < nvx) mb.add(row, base + node(i + 1, j), -diff + cwx);
        if (j > 1) mb.add(row, base + node(i, j - 1), -diff - cwy);
        if (j < nvx) mb.add(row, base + node(i, j + 1), -diff + cwy);
      }
    }
  }

  // Piecewise-constant pressure on 2h macrocells; the value at a sample
  // point offset by h/2 always falls strictly inside one fine cell, so the
  // macrocell lookup is integer arithmetic on fine-cell indices.
  const std::size_t big = (g + 1) / 2;  // macrocells per side
  const std::size_t n = big * big - 1;  // constant mode dropped via the last DOF
  const std::size_t dropped = big * big - 1;
  const auto cell = [big, dropped](std::size_t fine_col, std::size_t fine_row) {
    const std::size_t id = (fine_row / 2) * big + (fine_col / 2);
    return id == dropped ? static_cast<std::ptrdiff_t>(-1) : static_cast<std::ptrdiff_t>(id);
  };

  const double grad = 1.0 / (2.0 * h);  // two samples averaged per side, jump over h
  CooBuilder ab(m, n);
  const auto add_cell = [&ab](std::size_t row, std::ptrdiff_t c, double v) {
    if (c >= 0) ab.add(row, static_cast<std::size_t>(c), v);
  };
  for (std::size_t j = 1; j <= nvx; ++j) {
    for (std::size_t i = 1; i <= nvx; ++i) {
      const std::size_t rx = node(i, j);       // x-component row
      const std::size_t ry = nv + node(i, j);  // y-component row
      // x-gradient: cells right of the node minus cells left of it
      add_cell(rx, cell(i, j - 1), grad);
      add_cell(rx, cell(i, j), grad);
      add_cell(rx, cell(i - 1, j - 1), -grad);
      add_cell(rx, cell(i - 1, j), -grad);
      // y-gradient: cells above minus cells below
      add_cell(ry, cell(i - 1, j), grad);
      add_cell(ry, cell(i, j), grad);
      add_cell(ry, cell(i - 1, j - 1), -grad);
      add_cell(ry, cell(i, j - 1), -grad);
    }
  }

  SaddleSystem sys;
  sys.M = mb.build(/*drop_zeros=*/true);
  sys.A = ab.build(/*drop_zeros=*/true);
  SeededRng rng(spec.seed);
  sys.b = seeded_unit_vector(rng, n);
  sys.check_dimensions();
  return sys;
}

ReducedRhs reduce_general_form(const SparseFactorization& fact, const SparseMatrixCSR& A,
                               const Vec& b1, const Vec& b2) {
  if (b1.size() != A.nrows || b2.size() != A.ncols)
    throw std::invalid_argument("reduce_general_form: dimension mismatch");
  ReducedRhs out;
  out.w0 = apply_inverse(fact, b1);
  const Vec atw0 = spmv_t(A, out.w0);
  out.b = subtract(b2, atw0);
  const double scale = norm2(b2) + norm2(atw0);
  out.degenerate = norm2(out.b) <= 1e-13 * scale;
  return out;
}

ReducedRhs reduce_general_form(const SparseMatrixCSR& M, const SparseMatrixCSR& A, const Vec& b1,
                               const Vec& b2) {
  const SparseFactorization fact = factorize(M);
  return reduce_general_form(fact, A, b1, b2);
}

}  // namespace nscraig
