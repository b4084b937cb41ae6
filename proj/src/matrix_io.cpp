#include "cubica/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubica/error.hpp"

namespace cubica::matrix_io {
namespace {

constexpr std::string_view kMmHeader = "%%MatrixMarket matrix coordinate integer general";

void write_list(std::ostream& out, const std::vector<std::size_t>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
  out << '\n';
}

std::size_t read_count(std::istream& in, const char* what) {
  long long x = 0;
  if (!(in >> x) || x < 0) throw std::runtime_error(std::string("alist: bad ") + what);
  return static_cast<std::size_t>(x);
}

}  // namespace

std::optional<Format> parse_format(std::string_view s) {
  std::string k(s);
  std::transform(k.begin(), k.end(), k.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (k == "mm" || k == "mtx" || k == "matrixmarket") return Format::MatrixMarket;
  if (k == "alist") return Format::Alist;
  return std::nullopt;
}

void write_matrix_market(std::ostream& out, const BitMatrix& m) {
  out << kMmHeader << '\n' << m.rows() << ' ' << m.cols() << ' ' << m.count() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c : m.row_support(r)) out << r + 1 << ' ' << c + 1 << " 1\n";
}

BitMatrix read_matrix_market(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kMmHeader) throw std::runtime_error("MatrixMarket: unexpected header");
  while (std::getline(in, line) && !line.empty() && line[0] == '%') {
  }
  std::istringstream dims(line);
  std::size_t rows = 0, cols = 0, nnz = 0;
  if (!(dims >> rows >> cols >> nnz)) throw std::runtime_error("MatrixMarket: bad size line");
  BitMatrix m(rows, cols);
  for (std::size_t k = 0; k < nnz; ++k) {
    std::size_t i = 0, j = 0;
    long long v = 0;
    if (!(in >> i >> j >> v)) throw std::runtime_error("MatrixMarket: truncated entries");
    if (i < 1 || i > rows || j < 1 || j > cols || v != 1) throw std::runtime_error("MatrixMarket: bad entry");
    m.set(i - 1, j - 1);
  }
  if (m.count() != nnz) throw std::runtime_error("MatrixMarket: duplicate entries");
  return m;
}

void write_alist(std::ostream& out, const BitMatrix& m) {
  const BitMatrix t = m.transposed();
  std::vector<std::size_t> col_deg(m.cols()), row_deg(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) col_deg[c] = t.row_sum(c);
  for (std::size_t r = 0; r < m.rows(); ++r) row_deg[r] = m.row_sum(r);
  const std::size_t max_col = col_deg.empty() ? 0 : *std::max_element(col_deg.begin(), col_deg.end());
  const std::size_t max_row = row_deg.empty() ? 0 : *std::max_element(row_deg.begin(), row_deg.end());
  out << m.cols() << ' ' << m.rows() << '\n' << max_col << ' ' << max_row << '\n';
  write_list(out, col_deg);
  write_list(out, row_deg);
  auto neighbours = [&](const BitMatrix& x, std::size_t i, std::size_t width) {
    std::vector<std::size_t> v;
    for (std::size_t k : x.row_support(i)) v.push_back(k + 1);
    v.resize(width, 0);
    write_list(out, v);
  };
  for (std::size_t c = 0; c < m.cols(); ++c) neighbours(t, c, max_col);
  for (std::size_t r = 0; r < m.rows(); ++r) neighbours(m, r, max_row);
}

BitMatrix read_alist(std::istream& in) {
  const std::size_t n = read_count(in, "column count");
  const std::size_t rows = read_count(in, "row count");
  const std::size_t max_col = read_count(in, "max column degree");
  const std::size_t max_row = read_count(in, "max row degree");
  std::vector<std::size_t> col_deg(n), row_deg(rows);
  for (auto& d : col_deg) d = read_count(in, "column degree");
  for (auto& d : row_deg) d = read_count(in, "row degree");
  BitMatrix by_cols(n, rows), m(rows, n);
  auto read_lists = [&](BitMatrix& x, std::size_t count, std::size_t width, std::size_t bound,
                        const std::vector<std::size_t>& deg) {
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t seen = 0;
      for (std::size_t k = 0; k < width; ++k) {
        const std::size_t v = read_count(in, "neighbour");
        if (v == 0) continue;
        if (v > bound) throw std::runtime_error("alist: neighbour out of range");
        x.set(i, v - 1);
        ++seen;
      }
      if (seen != deg[i]) throw std::runtime_error("alist: degree mismatch");
    }
  };
  read_lists(by_cols, n, max_col, rows, col_deg);
  read_lists(m, rows, max_row, n, row_deg);
  if (by_cols.transposed() != m) throw std::runtime_error("alist: column and row lists disagree");
  return m;
}

void write_file(const std::filesystem::path& path, const BitMatrix& m, Format f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Io, "cannot open " + path.string() + " for writing");
  if (f == Format::MatrixMarket) {
    write_matrix_market(out, m);
  } else {
    write_alist(out, m);
  }
  out.flush();
  if (!out) throw Error(Errc::Io, "write failed: " + path.string());
}

BitMatrix read_file(const std::filesystem::path& path, Format f) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string() + " for reading");
  try {
    return f == Format::MatrixMarket ? read_matrix_market(in) : read_alist(in);
  } catch (const std::runtime_error& e) {
    throw Error(Errc::Io, path.string() + ": " + e.what());
  }
}

}  // namespace cubica::matrix_io
