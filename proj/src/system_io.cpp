#include "nscraig/system_io.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "nscraig/matrix_market.hpp"

namespace nscraig {

namespace fs = std::filesystem;
using nlohmann::json;

SaddleSystem load_system(const std::string& dir) {
  const fs::path base(dir);
  SaddleSystem sys;
  sys.M = load_matrix_market((base / "M.mtx").string());
  sys.A = load_matrix_market((base / "A.mtx").string());
  sys.b = load_vector_market((base / "b.mtx").string());

  if (sys.M.nrows != sys.M.ncols)
    throw std::invalid_argument("load_system: M.mtx is not square");
  if (sys.A.nrows != sys.M.nrows)
    throw std::invalid_argument("load_system: dimension mismatch across files: A.mtx has " +
                                std::to_string(sys.A.nrows) + " rows, M.mtx is " +
                                std::to_string(sys.M.nrows) + " x " +
                                std::to_string(sys.M.ncols));
  if (sys.b.size() != sys.A.ncols)
    throw std::invalid_argument("load_system: dimension mismatch across files: b.mtx has " +
                                std::to_string(sys.b.size()) + " entries, A.mtx has " +
                                std::to_string(sys.A.ncols) + " columns");
  sys.check_dimensions();
  return sys;
}

void save_system(const std::string& dir, const SaddleSystem& sys, const ProblemSpec& spec) {
  const fs::path base(dir);
  fs::create_directories(base);
  save_matrix_market((base / "M.mtx").string(), sys.M);
  save_matrix_market((base / "A.mtx").string(), sys.A);
  save_vector_market((base / "b.mtx").string(), sys.b);

  json meta;
  meta["kind"] = to_string(spec.kind);
  meta["m"] = spec.m;
  meta["n"] = spec.n;
  meta["grid"] = spec.grid;
  meta["seed"] = spec.seed;
  meta["nu"] = spec.nu;
  meta["wind_x"] = spec.wind_x;
  meta["wind_y"] = spec.wind_y;
  meta["skew_scale"] = spec.skew_scale;
  meta["path"] = spec.path;
  std::ofstream out(base / "meta.json");
  out << meta.dump(2) << "\n";
}

ProblemSpec load_meta(const std::string& dir) {
  ProblemSpec spec;
  spec.kind = ProblemKind::file;
  spec.path = dir;
  const fs::path meta_path = fs::path(dir) / "meta.json";
  std::ifstream in(meta_path);
  if (!in) return spec;
  json meta = json::parse(in);
  if (meta.contains("kind")) spec.kind = problem_kind_from_string(meta["kind"].get<std::string>());
  spec.m = meta.value("m", std::size_t{0});
  spec.n = meta.value("n", std::size_t{0});
  spec.grid = meta.value("grid", std::size_t{0});
  spec.seed = meta.value("seed", std::uint64_t{0});
  spec.nu = meta.value("nu", 0.01);
  spec.wind_x = meta.value("wind_x", 0.0);
  spec.wind_y = meta.value("wind_y", 0.0);
  spec.skew_scale = meta.value("skew_scale", 1.0);
  spec.path = meta.value("path", dir);
  return spec;
}

}  // namespace nscraig
