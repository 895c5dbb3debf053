#include <doctest.h>

#include "nscraig/csr.hpp"
#include "nscraig/vector_ops.hpp"
#include "support/oracles.hpp"

using namespace nscraig;

namespace {

SparseMatrixCSR lower_2x2() {
  // [[2,0],[1,3]]
  CooBuilder b(2, 2);
  b.add(0, 0, 2.0);
  b.add(1, 0, 1.0);
  b.add(1, 1, 3.0);
  return b.build();
}

}  // namespace

TEST_SUITE("csr") {
  TEST_CASE("spmv identity and zero") {
    const auto id = SparseMatrixCSR::identity(3);
    CHECK(spmv(id, {1.0, 2.0, 3.0}) == Vec{1.0, 2.0, 3.0});

    CooBuilder zb(2, 2);
    const auto zero = zb.build();
    CHECK(spmv(zero, {5.0, 7.0}) == Vec{0.0, 0.0});
  }

  TEST_CASE("spmv dense oracle") {
    const auto a = lower_2x2();
    CHECK(spmv(a, {1.0, 1.0}) == Vec{2.0, 4.0});
    CHECK(spmv_t(a, {1.0, 1.0}) == Vec{3.0, 3.0});
    CHECK(spmv_t(SparseMatrixCSR::identity(4), {1, 2, 3, 4}) == Vec{1, 2, 3, 4});
  }

  TEST_CASE("spmv dimension mismatch") {
    const auto a = lower_2x2();
    CHECK_THROWS_AS(spmv(a, Vec(3, 1.0)), std::invalid_argument);
    CHECK_THROWS_AS(spmv_t(a, Vec(5, 1.0)), std::invalid_argument);
  }

  TEST_CASE("adjoint identity on random 5x3") {
    SeededRng rng(7);
    CooBuilder b(5, 3);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (rng.uniform01() < 0.7) b.add(i, j, rng.uniform(-2.0, 2.0));
    const auto a = b.build();
    const Vec x = oracle::random_vec(3, 1);
    const Vec y = oracle::random_vec(5, 2);
    const double lhs = dot(y, spmv(a, x));
    const double rhs = dot(spmv_t(a, y), x);
    CHECK(std::fabs(lhs - rhs) <= 1e-14 * (std::fabs(lhs) + 1.0));
  }

  TEST_CASE("adjoint identity property sweep") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      SeededRng rng(seed);
      const std::size_t rows = 2 + rng.below(30), cols = 1 + rng.below(20);
      CooBuilder b(rows, cols);
      for (std::size_t e = 0; e < rows * 2; ++e)
        b.add(rng.below(rows), rng.below(cols), rng.uniform(-3.0, 3.0));
      const auto a = b.build();
      const Vec x = oracle::random_vec(cols, seed * 3 + 1);
      const Vec y = oracle::random_vec(rows, seed * 3 + 2);
      const double lhs = dot(y, spmv(a, x));
      const double rhs = dot(spmv_t(a, y), x);
      CHECK(std::fabs(lhs - rhs) <= 1e-13 * (std::fabs(lhs) + std::fabs(rhs) + 1.0));
    }
  }

  TEST_CASE("m_inner examples") {
    const auto id = SparseMatrixCSR::identity(2);
    CHECK(m_inner(id, {1.0, 2.0}, {3.0, 4.0}) == doctest::Approx(11.0));
    CHECK(m_inner(id, {0.0, 0.0}, {3.0, 4.0}) == 0.0);

    CooBuilder b(2, 2);
    b.add(0, 0, 2.0);
    b.add(0, 1, 1.0);
    b.add(1, 1, 2.0);
    const auto m = b.build();
    CHECK(m_inner(m, {1.0, 0.0}, {0.0, 1.0}) == doctest::Approx(1.0));
  }

  TEST_CASE("m_inner rejects non-square M and mismatched vectors") {
    const auto rect = lower_2x2();
    CooBuilder b(2, 3);
    b.add(0, 0, 1.0);
    CHECK_THROWS_AS(m_inner(b.build(), {1.0, 1.0}, {1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(m_inner(rect, {1.0, 1.0, 1.0}, {1.0, 1.0}), std::invalid_argument);
  }

  TEST_CASE("m_norm domain error on indefinite form") {
    const auto neg = SparseMatrixCSR::diagonal({-1.0, -1.0});
    CHECK_THROWS_AS(m_norm(neg, {1.0, 0.0}), std::domain_error);
    CHECK(m_norm(SparseMatrixCSR::identity(2), {3.0, 4.0}) == doctest::Approx(5.0));
  }

  TEST_CASE("builder merges duplicates and sorts") {
    CooBuilder b(2, 3);
    b.add(1, 2, 1.0);
    b.add(0, 1, 2.0);
    b.add(1, 2, 0.5);
    b.add(0, 0, -1.0);
    const auto m = b.build();
    m.check_invariants();
    CHECK(m.nnz() == 3);
    CHECK(spmv(m, {1.0, 1.0, 1.0}) == Vec{1.0, 1.5});
  }

  TEST_CASE("builder drop_zeros removes cancelled entries") {
    CooBuilder b(1, 2);
    b.add(0, 0, 1.0);
    b.add(0, 0, -1.0);
    b.add(0, 1, 2.0);
    CHECK(b.build(true).nnz() == 1);
    CHECK(b.build(false).nnz() == 2);
  }

  TEST_CASE("invariant violations are rejected") {
    SparseMatrixCSR m;
    m.nrows = m.ncols = 2;
    m.row_offsets = {0, 1};  // wrong length
    m.col_indices = {0};
    m.values = {1.0};
    CHECK_THROWS_AS(m.check_invariants(), std::invalid_argument);

    m.row_offsets = {0, 2, 2};
    m.col_indices = {1, 1};  // not strictly increasing within row 0
    m.values = {1.0, 1.0};
    CHECK_THROWS_AS(m.check_invariants(), std::invalid_argument);
  }
}
