#include <filesystem>
#include <random>
#include <sstream>

#include "cubica/error.hpp"
#include "cubica/matrix_io.hpp"
#include "doctest.h"

using namespace cubica;
using matrix_io::Format;

namespace {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 rng(seed);
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng() % 5 == 0) m.set(r, c);
  return m;
}

}  // namespace

TEST_CASE("stream round trips") {
  for (unsigned seed = 1; seed <= 10; ++seed) {
    const auto m = random_matrix(seed * 3, 70 + seed, seed);
    std::stringstream mm, al;
    matrix_io::write_matrix_market(mm, m);
    matrix_io::write_alist(al, m);
    CHECK(matrix_io::read_matrix_market(mm) == m);
    CHECK(matrix_io::read_alist(al) == m);
  }
}

TEST_CASE("formats") {
  BitMatrix m(2, 3);
  m.set(0, 0);
  m.set(1, 2);
  m.set(0, 2);
  std::stringstream mm;
  matrix_io::write_matrix_market(mm, m);
  CHECK(mm.str() == "%%MatrixMarket matrix coordinate integer general\n2 3 3\n1 1 1\n1 3 1\n2 3 1\n");
  std::stringstream al;
  matrix_io::write_alist(al, m);
  CHECK(al.str() == "3 2\n2 2\n1 0 2\n2 1\n1 0\n0 0\n1 2\n1 3\n3 0\n");
  CHECK(matrix_io::parse_format("MM") == Format::MatrixMarket);
  CHECK(matrix_io::parse_format("alist") == Format::Alist);
  CHECK(!matrix_io::parse_format("csv"));
}

TEST_CASE("malformed input") {
  std::stringstream bad_header("%%MatrixMarket matrix array real general\n1 1\n1\n");
  CHECK_THROWS(matrix_io::read_matrix_market(bad_header));
  std::stringstream dup("%%MatrixMarket matrix coordinate integer general\n2 2 2\n1 1 1\n1 1 1\n");
  CHECK_THROWS(matrix_io::read_matrix_market(dup));
  std::stringstream range("%%MatrixMarket matrix coordinate integer general\n2 2 1\n3 1 1\n");
  CHECK_THROWS(matrix_io::read_matrix_market(range));
  std::stringstream truncated("3 2\n1 2\n1 0 2\n");
  CHECK_THROWS(matrix_io::read_alist(truncated));
  std::stringstream disagree("2 2\n1 1\n1 1\n1 1\n1\n2\n2\n1\n");
  CHECK_THROWS(matrix_io::read_alist(disagree));
}

TEST_CASE("file errors") {
  const BitMatrix m(1, 1);
  try {
    matrix_io::write_file("/nonexistent/dir/m.mtx", m, Format::MatrixMarket);
    FAIL("write succeeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Io);
  }
  CHECK_THROWS_AS(matrix_io::read_file("/nonexistent/m.alist", Format::Alist), Error);
  const auto path = std::filesystem::temp_directory_path() / "cubica_test_roundtrip.alist";
  const auto r = random_matrix(9, 12, 77);
  matrix_io::write_file(path, r, Format::Alist);
  CHECK(matrix_io::read_file(path, Format::Alist) == r);
  std::filesystem::remove(path);
}
