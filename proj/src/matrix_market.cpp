#include "nscraig/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace nscraig {

namespace {

struct Header {
  bool coordinate = true;
  bool symmetric = false;
};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

struct Reader {
  std::ifstream in;
  std::string path;
  long line_no = 0;

  explicit Reader(const std::string& p) : in(p), path(p) {
    if (!in) throw MatrixMarketError(p, 0, "cannot open file");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw MatrixMarketError(path, line_no, what);
  }

  Header read_header() {
    std::string first;
    if (!std::getline(in, first)) fail("empty file");
    ++line_no;
    std::istringstream ss(first);
    std::string banner, object, format, field, symmetry;
    ss >> banner >> object >> format >> field >> symmetry;
    if (lower(banner) != "%%matrixmarket") fail("malformed header: missing %%MatrixMarket banner");
    if (lower(object) != "matrix") fail("malformed header: unsupported object '" + object + "'");
    Header h;
    const std::string fmt = lower(format);
    if (fmt == "coordinate") h.coordinate = true;
    else if (fmt == "array") h.coordinate = false;
    else fail("malformed header: unsupported format '" + format + "'");
    if (lower(field) != "real") fail("malformed header: unsupported field '" + field + "'");
    const std::string sym = lower(symmetry);
    if (sym == "general") h.symmetric = false;
    else if (sym == "symmetric") h.symmetric = true;
    else fail("malformed header: unsupported symmetry '" + symmetry + "'");
    return h;
  }

  // Next line that is neither blank nor a % comment.
  bool next_content_line(std::string& out) {
    while (std::getline(in, out)) {
      ++line_no;
      const auto pos = out.find_first_not_of(" \t\r");
      if (pos == std::string::npos || out[pos] == '%') continue;
      return true;
    }
    return false;
  }
};

}  // namespace

SparseMatrixCSR load_matrix_market(const std::string& path) {
  Reader r(path);
  const Header h = r.read_header();
  if (!h.coordinate) r.fail("expected coordinate format for a sparse matrix");

  std::string line;
  if (!r.next_content_line(line)) r.fail("missing size line");
  long long nrows = -1, ncols = -1, nnz = -1;
  {
    std::istringstream ss(line);
    if (!(ss >> nrows >> ncols >> nnz) || nrows < 0 || ncols < 0 || nnz < 0)
      r.fail("malformed size line '" + line + "'");
  }

  CooBuilder builder(static_cast<std::size_t>(nrows), static_cast<std::size_t>(ncols));
  for (long long e = 0; e < nnz; ++e) {
    if (!r.next_content_line(line)) r.fail("unexpected end of file: expected " +
                                           std::to_string(nnz) + " entries");
    std::istringstream ss(line);
    long long i = 0, j = 0;
    double v = 0.0;
    if (!(ss >> i >> j >> v)) r.fail("malformed entry '" + line + "'");
    if (i < 1 || i > nrows || j < 1 || j > ncols)
      r.fail("index out of range in entry '" + line + "'");
    // the format stores 1-based indices
    builder.add(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), v);
    if (h.symmetric && i != j)
      builder.add(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1), v);
  }
  return builder.build();
}

void save_matrix_market(const std::string& path, const SparseMatrixCSR& m) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw MatrixMarketError(path, 0, "cannot open file for writing");
  std::fprintf(f, "%%%%MatrixMarket matrix coordinate real general\n");
  std::fprintf(f, "%zu %zu %zu\n", m.nrows, m.ncols, m.nnz());
  for (std::size_t r = 0; r < m.nrows; ++r)
    for (std::size_t k = m.row_offsets[r]; k < m.row_offsets[r + 1]; ++k)
      std::fprintf(f, "%zu %zu %.17g\n", r + 1, m.col_indices[k] + 1, m.values[k]);
  std::fclose(f);
}

Vec load_vector_market(const std::string& path) {
  Reader r(path);
  const Header h = r.read_header();
  if (h.symmetric) r.fail("vectors must use general symmetry");

  std::string line;
  if (!r.next_content_line(line)) r.fail("missing size line");
  std::istringstream ss(line);
  long long nrows = -1, ncols = -1, nnz = -1;
  if (h.coordinate) {
    if (!(ss >> nrows >> ncols >> nnz) || nrows < 0) r.fail("malformed size line '" + line + "'");
  } else {
    if (!(ss >> nrows >> ncols) || nrows < 0) r.fail("malformed size line '" + line + "'");
  }
  if (ncols != 1) r.fail("expected an n x 1 vector, got " + std::to_string(ncols) + " columns");

  Vec v(static_cast<std::size_t>(nrows), 0.0);
  if (h.coordinate) {
    for (long long e = 0; e < nnz; ++e) {
      if (!r.next_content_line(line)) r.fail("unexpected end of file");
      std::istringstream es(line);
      long long i = 0, j = 0;
      double val = 0.0;
      if (!(es >> i >> j >> val)) r.fail("malformed entry '" + line + "'");
      if (i < 1 || i > nrows || j != 1) r.fail("index out of range in entry '" + line + "'");
      v[static_cast<std::size_t>(i - 1)] = val;
    }
  } else {
    for (long long e = 0; e < nrows; ++e) {
      if (!r.next_content_line(line)) r.fail("unexpected end of file");
      std::istringstream es(line);
      double val = 0.0;
      if (!(es >> val)) r.fail("malformed value '" + line + "'");
      v[static_cast<std::size_t>(e)] = val;
    }
  }
  return v;
}

void save_vector_market(const std::string& path, const Vec& v) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw MatrixMarketError(path, 0, "cannot open file for writing");
  std::fprintf(f, "%%%%MatrixMarket matrix array real general\n");
  std::fprintf(f, "%zu 1\n", v.size());
  for (double x : v) std::fprintf(f, "%.17g\n", x);
  std::fclose(f);
}

}  // namespace nscraig
