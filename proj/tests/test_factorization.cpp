#include <doctest.h>

#include "nscraig/factorization.hpp"
#include "nscraig/vector_ops.hpp"
#include "support/oracles.hpp"

using namespace nscraig;

TEST_SUITE("factorization") {
  TEST_CASE("identity round trip") {
    const auto fact = factorize(SparseMatrixCSR::identity(4));
    const Vec x{1.0, -2.0, 3.5, 0.0};
    CHECK(apply_inverse(fact, x) == x);
  }

  TEST_CASE("diagonal case") {
    const auto fact = factorize(SparseMatrixCSR::diagonal({2.0, 4.0}));
    const Vec y = apply_inverse(fact, {2.0, 4.0});
    CHECK(y[0] == doctest::Approx(1.0));
    CHECK(y[1] == doctest::Approx(1.0));
  }

  TEST_CASE("random nonsymmetric 50x50 residual check") {
    const auto m = oracle::random_dominant(50, 42);
    const auto fact = factorize(m);
    const Vec x = oracle::random_vec(50, 9);
    const Vec y = apply_inverse(fact, x);
    const Vec r = oracle::sub(spmv(m, y), x);
    CHECK(norm2(r) < 1e-12 * norm2(x));
  }

  TEST_CASE("round-trip property on several seeds") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const std::size_t n = 10 + 7 * seed;
      const auto m = oracle::random_dominant(n, seed);
      const auto fact = factorize(m);
      const Vec x = oracle::random_vec(n, seed + 100);
      const Vec r = oracle::sub(spmv(m, apply_inverse(fact, x)), x);
      CHECK(norm2(r) <= 1e-10 * norm2(x));
    }
  }

  TEST_CASE("singular pivot names the failing position") {
    CooBuilder b(3, 3);  // column 1 identically zero
    b.add(0, 0, 1.0);
    b.add(1, 2, 1.0);
    b.add(2, 0, 2.0);
    bool thrown = false;
    try {
      factorize(b.build());
    } catch (const FactorizationError& e) {
      thrown = true;
      CHECK(std::string(e.what()).find("singular") != std::string::npos);
      CHECK(e.pivot_index() >= 0);
    }
    CHECK(thrown);
  }

  TEST_CASE("non-square input rejected") {
    CooBuilder b(2, 3);
    b.add(0, 0, 1.0);
    CHECK_THROWS_AS(factorize(b.build()), std::invalid_argument);
  }

  TEST_CASE("apply_inverse dimension mismatch") {
    const auto fact = factorize(SparseMatrixCSR::identity(3));
    CHECK_THROWS_AS(apply_inverse(fact, Vec(5, 1.0)), std::invalid_argument);
  }
}
