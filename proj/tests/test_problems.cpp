#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "nscraig/generators.hpp"
#include "nscraig/matrix_market.hpp"
#include "nscraig/system_io.hpp"
#include "nscraig/validate.hpp"
#include "nscraig/vector_ops.hpp"
#include "support/oracles.hpp"

using namespace nscraig;
namespace fs = std::filesystem;

namespace {

ProblemSpec synthetic_spec(std::size_t m, std::size_t n, std::uint64_t seed, double skew = 1.0) {
  ProblemSpec spec;
  spec.kind = ProblemKind::synthetic;
  spec.m = m;
  spec.n = n;
  spec.seed = seed;
  spec.skew_scale = skew;
  return spec;
}

ProblemSpec oseen_spec(std::size_t grid, double wx, double wy, std::uint64_t seed = 1) {
  ProblemSpec spec;
  spec.kind = ProblemKind::oseen_fd;
  spec.grid = grid;
  spec.nu = 0.1;
  spec.wind_x = wx;
  spec.wind_y = wy;
  spec.seed = seed;
  return spec;
}

bool structurally_symmetric(const SparseMatrixCSR& m) {
  const auto d = oracle::to_dense(m);
  for (std::size_t i = 0; i < m.nrows; ++i)
    for (std::size_t j = 0; j < m.ncols; ++j)
      if (d[i][j] != d[j][i]) return false;
  return true;
}

std::size_t dense_rank(const SparseMatrixCSR& a) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(a.nrows, a.ncols);
  for (std::size_t r = 0; r < a.nrows; ++r)
    for (std::size_t k = a.row_offsets[r]; k < a.row_offsets[r + 1]; ++k)
      d(r, a.col_indices[k]) += a.values[k];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(d);
  const auto& sv = svd.singularValues();
  const double thresh = std::max(a.nrows, a.ncols) * 1e-13 * (sv.size() ? sv(0) : 0.0);
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > thresh) ++rank;
  return rank;
}

struct TempDir {
  fs::path path;
  TempDir(const std::string& tag) : path(fs::temp_directory_path() / ("nscraig_test_" + tag)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_SUITE("problems") {
  TEST_CASE("synthetic: zero skew gives a symmetric M") {
    const auto sys = gen_synthetic(synthetic_spec(20, 6, 3, 0.0));
    CHECK(structurally_symmetric(sys.M));
  }

  TEST_CASE("synthetic: deterministic for a fixed seed") {
    const auto a = gen_synthetic(synthetic_spec(30, 10, 7));
    const auto b = gen_synthetic(synthetic_spec(30, 10, 7));
    CHECK(a.M.values == b.M.values);
    CHECK(a.M.col_indices == b.M.col_indices);
    CHECK(a.A.values == b.A.values);
    CHECK(a.b == b.b);
    const auto c = gen_synthetic(synthetic_spec(30, 10, 8));
    CHECK(a.M.values != c.M.values);
  }

  TEST_CASE("synthetic: sampled quadratic form stays positive (100x30)") {
    const auto sys = gen_synthetic(synthetic_spec(100, 30, 11));
    SeededRng rng(99);
    double min_q = 1e300;
    Vec x(100);
    for (int s = 0; s < 100; ++s) {
      for (double& v : x) v = rng.normal();
      scal(1.0 / norm2(x), x);
      min_q = std::min(min_q, m_inner(sys.M, x, x));
    }
    CHECK(min_q > 0.0);
  }

  TEST_CASE("synthetic: m <= n rejected") {
    CHECK_THROWS_AS(gen_synthetic(synthetic_spec(10, 10, 1)), std::invalid_argument);
    CHECK_THROWS_AS(gen_synthetic(synthetic_spec(5, 10, 1)), std::invalid_argument);
  }

  TEST_CASE("oseen: zero wind gives an exactly symmetric M") {
    const auto sys = gen_oseen_fd(oseen_spec(8, 0.0, 0.0));
    CHECK(structurally_symmetric(sys.M));
  }

  TEST_CASE("oseen: convection is skew, x^T M x = nu x^T L x") {
    const auto with_wind = gen_oseen_fd(oseen_spec(8, 1.0, 0.7));
    const auto no_wind = gen_oseen_fd(oseen_spec(8, 0.0, 0.0));
    const Vec x = oracle::random_vec(with_wind.m_dim(), 5);
    const double qw = m_inner(with_wind.M, x, x);
    const double q0 = m_inner(no_wind.M, x, x);
    CHECK(std::fabs(qw - q0) <= 1e-12 * std::fabs(q0));
  }

  TEST_CASE("oseen: coupling block has full column rank (grid 8)") {
    const auto sys = gen_oseen_fd(oseen_spec(8, 1.0, 0.5));
    CHECK(dense_rank(sys.A) == sys.n_dim());
    CHECK(sys.m_dim() == 2 * 7 * 7);
    CHECK(sys.n_dim() == 4 * 4 - 1);
  }

  TEST_CASE("oseen: odd grids work and keep full rank") {
    const auto sys = gen_oseen_fd(oseen_spec(7, 0.8, -0.3));
    CHECK(dense_rank(sys.A) == sys.n_dim());
  }

  TEST_CASE("oseen: degenerate grid rejected") {
    CHECK_THROWS_AS(gen_oseen_fd(oseen_spec(2, 0.0, 0.0)), std::invalid_argument);
    auto spec = oseen_spec(8, 0.0, 0.0);
    spec.nu = 0.0;
    CHECK_THROWS_AS(gen_oseen_fd(spec), std::invalid_argument);
  }

  TEST_CASE("generated systems pass validation") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      const auto synth = gen_synthetic(synthetic_spec(60, 20, seed));
      const auto rs = validate_system(synth, 100);
      CHECK(rs.m_positive);
      CHECK(rs.a_full_rank);
    }
    for (std::size_t grid : {6ul, 9ul, 12ul}) {
      const auto os = gen_oseen_fd(oseen_spec(grid, 1.0, 0.5));
      const auto ro = validate_system(os, 100);
      CHECK(ro.m_positive);
      CHECK(ro.a_full_rank);
    }
  }

  TEST_CASE("iterative singular-value fallback agrees with the dense SVD") {
    const auto sys = gen_synthetic(synthetic_spec(80, 25, 47));
    const auto dense = validate_system(sys, 10);
    const auto iterative = validate_system(sys, 10, 0x5eedULL, /*dense_threshold=*/0);
    CHECK(iterative.a_full_rank == dense.a_full_rank);
    CHECK(iterative.max_singular_value ==
          doctest::Approx(dense.max_singular_value).epsilon(1e-6));
    CHECK(iterative.min_singular_value ==
          doctest::Approx(dense.min_singular_value).epsilon(1e-4));
  }

  TEST_CASE("validation flags a duplicated column") {
    auto sys = gen_synthetic(synthetic_spec(30, 10, 17));
    // overwrite column 3 with a copy of column 2
    CooBuilder b(30, 10);
    const auto dense = oracle::to_dense(sys.A);
    for (std::size_t i = 0; i < 30; ++i)
      for (std::size_t j = 0; j < 10; ++j) {
        const double v = j == 3 ? dense[i][2] : dense[i][j];
        if (v != 0.0) b.add(i, j, v);
      }
    sys.A = b.build();
    const auto report = validate_system(sys, 50);
    CHECK(!report.a_full_rank);
  }

  TEST_CASE("validation on the identity M") {
    SaddleSystem sys;
    sys.M = SparseMatrixCSR::identity(10);
    sys.A = gen_synthetic(synthetic_spec(10, 3, 19)).A;
    sys.b = Vec(3, 1.0);
    const auto report = validate_system(sys, 50);
    CHECK(report.m_positive);
    CHECK(report.min_quadratic_form == doctest::Approx(1.0));
  }

  TEST_CASE("reduce_general_form: zero b1 passes b2 through") {
    const auto sys = gen_synthetic(synthetic_spec(20, 6, 23));
    const auto red = reduce_general_form(sys.M, sys.A, Vec(20, 0.0), sys.b);
    CHECK(red.b == sys.b);
    CHECK(norm2(red.w0) == 0.0);
    CHECK(!red.degenerate);
  }

  TEST_CASE("reduce_general_form: consistent b2 collapses to zero and is flagged") {
    const auto sys = gen_synthetic(synthetic_spec(20, 6, 29));
    const Vec b1 = oracle::random_vec(20, 1);
    const auto fact = factorize(sys.M);
    const Vec b2 = spmv_t(sys.A, apply_inverse(fact, b1));
    const auto red = reduce_general_form(fact, sys.A, b1, b2);
    CHECK(red.degenerate);
    CHECK(norm2(red.b) <= 1e-12 * norm2(b2));
  }

  TEST_CASE("reduce_general_form round trip solves the general system") {
    const auto sys = gen_synthetic(synthetic_spec(30, 10, 31));
    const Vec b1 = oracle::random_vec(30, 2);
    const Vec b2 = oracle::random_vec(10, 3);
    const auto red = reduce_general_form(sys.M, sys.A, b1, b2);

    // solve the reduced system for (u, p) via the dense oracle
    const auto [u, p] = oracle::direct_saddle_solve(sys.M, sys.A, red.b);
    Vec w = u;
    axpy(1.0, red.w0, w);
    // block residuals of the general form
    Vec r1 = spmv(sys.M, w);
    axpy(1.0, spmv(sys.A, p), r1);
    axpy(-1.0, b1, r1);
    Vec r2 = subtract(spmv_t(sys.A, w), b2);
    const double scale = norm2(b1) + norm2(b2);
    CHECK(norm2(r1) <= 1e-9 * scale);
    CHECK(norm2(r2) <= 1e-9 * scale);
  }

  TEST_CASE("minimum oseen grid solves end to end") {
    const auto sys = gen_oseen_fd(oseen_spec(3, 1.0, -0.5));
    CHECK(sys.m_dim() == 8);
    CHECK(sys.n_dim() == 3);
    CHECK(dense_rank(sys.A) == 3);
  }

  TEST_CASE("matrix market: 2x2 identity file") {
    TempDir dir("mm_identity");
    const auto path = (dir.path / "id.mtx").string();
    {
      std::ofstream out(path);
      out << "%%MatrixMarket matrix coordinate real general\n"
          << "% comment line\n"
          << "2 2 2\n"
          << "1 1 1.0\n"
          << "2 2 1.0\n";
    }
    const auto m = load_matrix_market(path);
    m.check_invariants();
    CHECK(m.nrows == 2);
    CHECK(spmv(m, {3.0, 4.0}) == Vec{3.0, 4.0});
  }

  TEST_CASE("matrix market: 1-based indices map to 0-based storage") {
    TempDir dir("mm_onebased");
    const auto path = (dir.path / "a.mtx").string();
    {
      std::ofstream out(path);
      out << "%%MatrixMarket matrix coordinate real general\n"
          << "2 3 1\n"
          << "2 3 5.5\n";
    }
    const auto m = load_matrix_market(path);
    CHECK(m.nnz() == 1);
    CHECK(m.col_indices[0] == 2);
    CHECK(m.row_offsets[1] == 0);  // row 0 empty
    CHECK(m.values[0] == 5.5);
  }

  TEST_CASE("matrix market: symmetric storage expands") {
    TempDir dir("mm_sym");
    const auto path = (dir.path / "s.mtx").string();
    {
      std::ofstream out(path);
      out << "%%MatrixMarket matrix coordinate real symmetric\n"
          << "2 2 2\n"
          << "1 1 2.0\n"
          << "2 1 3.0\n";
    }
    const auto m = load_matrix_market(path);
    CHECK(m.nnz() == 3);
    const auto d = oracle::to_dense(m);
    CHECK(d[0][1] == 3.0);
    CHECK(d[1][0] == 3.0);
  }

  TEST_CASE("matrix market: parse errors carry line numbers") {
    TempDir dir("mm_errs");
    const auto bad_header = (dir.path / "h.mtx").string();
    {
      std::ofstream out(bad_header);
      out << "%%NotMatrixMarket nope\n";
    }
    CHECK_THROWS_AS(load_matrix_market(bad_header), MatrixMarketError);

    const auto out_of_range = (dir.path / "r.mtx").string();
    {
      std::ofstream out(out_of_range);
      out << "%%MatrixMarket matrix coordinate real general\n"
          << "2 2 1\n"
          << "3 1 1.0\n";
    }
    try {
      load_matrix_market(out_of_range);
      FAIL("expected MatrixMarketError");
    } catch (const MatrixMarketError& e) {
      CHECK(e.line() == 3);
      CHECK(std::string(e.what()).find("out of range") != std::string::npos);
    }

    const auto truncated = (dir.path / "t.mtx").string();
    {
      std::ofstream out(truncated);
      out << "%%MatrixMarket matrix coordinate real general\n"
          << "2 2 2\n"
          << "1 1 1.0\n";
    }
    CHECK_THROWS_AS(load_matrix_market(truncated), MatrixMarketError);
  }

  TEST_CASE("matrix market: vectors load from coordinate or array form") {
    TempDir dir("mm_vec");
    const auto coord = (dir.path / "c.mtx").string();
    {
      std::ofstream out(coord);
      out << "%%MatrixMarket matrix coordinate real general\n"
          << "4 1 2\n"
          << "1 1 3.5\n"
          << "4 1 -1.0\n";
    }
    CHECK(load_vector_market(coord) == Vec{3.5, 0.0, 0.0, -1.0});

    const auto arr = (dir.path / "a.mtx").string();
    {
      std::ofstream out(arr);
      out << "%%MatrixMarket matrix array real general\n"
          << "3 1\n"
          << "1.5\n"
          << "2.5\n"
          << "-0.5\n";
    }
    CHECK(load_vector_market(arr) == Vec{1.5, 2.5, -0.5});

    const auto wide = (dir.path / "w.mtx").string();
    {
      std::ofstream out(wide);
      out << "%%MatrixMarket matrix array real general\n"
          << "3 2\n";
    }
    CHECK_THROWS_AS(load_vector_market(wide), MatrixMarketError);
  }

  TEST_CASE("matrix market: save/load round trip is bit exact") {
    TempDir dir("mm_round");
    const auto sys = gen_synthetic(synthetic_spec(25, 8, 37));
    const auto mpath = (dir.path / "m.mtx").string();
    save_matrix_market(mpath, sys.M);
    const auto back = load_matrix_market(mpath);
    CHECK(back.values == sys.M.values);
    CHECK(back.col_indices == sys.M.col_indices);
    CHECK(back.row_offsets == sys.M.row_offsets);

    const auto vpath = (dir.path / "v.mtx").string();
    save_vector_market(vpath, sys.b);
    CHECK(load_vector_market(vpath) == sys.b);
  }

  TEST_CASE("system io: directory round trip and meta") {
    TempDir dir("sysio");
    auto spec = synthetic_spec(20, 6, 41);
    const auto sys = gen_synthetic(spec);
    save_system(dir.path.string(), sys, spec);
    const auto loaded = load_system(dir.path.string());
    CHECK(loaded.M.values == sys.M.values);
    CHECK(loaded.A.values == sys.A.values);
    CHECK(loaded.b == sys.b);
    const auto meta = load_meta(dir.path.string());
    CHECK(meta.kind == ProblemKind::synthetic);
    CHECK(meta.m == 20);
    CHECK(meta.seed == 41);
  }

  TEST_CASE("system io: dimension mismatch across files is reported") {
    TempDir dir("sysio_bad");
    auto spec = synthetic_spec(20, 6, 43);
    const auto sys = gen_synthetic(spec);
    save_system(dir.path.string(), sys, spec);
    // shrink b on disk
    save_vector_market((dir.path / "b.mtx").string(), Vec(3, 1.0));
    CHECK_THROWS_WITH_AS(load_system(dir.path.string()),
                         doctest::Contains("dimension mismatch across files"),
                         std::invalid_argument);
  }

  TEST_CASE("problem digest is stable and spec-sensitive") {
    const auto s1 = synthetic_spec(20, 6, 1);
    const auto s2 = synthetic_spec(20, 6, 2);
    CHECK(problem_digest(s1) == problem_digest(s1));
    CHECK(problem_digest(s1) != problem_digest(s2));
  }
}
