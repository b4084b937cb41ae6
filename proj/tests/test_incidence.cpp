#include "cubica/error.hpp"
#include "cubica/workbench.hpp"
#include "doctest.h"

using namespace cubica;
using classify::LineType;
using classify::PlaneType;
using incidence::Rational;

TEST_CASE("rational formatting") {
  CHECK(incidence::to_string(Rational(9, 10)) == "9/10");
  CHECK(incidence::to_string(Rational(81, 24)) == "27/8");
  CHECK(incidence::to_string(Rational(4)) == "4/1");
  CHECK(incidence::parse_rational("27/8") == Rational(27, 8));
  CHECK(incidence::parse_rational("5") == Rational(5));
  CHECK(!incidence::parse_rational("1/0"));
  CHECK(!incidence::parse_rational("x"));
}

TEST_CASE("submatrix shapes") {
  const Workbench w5(5);
  const auto m = w5.submatrix({PlaneType::TwoC, LineType::RC, 0});
  CHECK(m.bits.rows() == 15);
  CHECK(m.bits.cols() == 30);
  for (auto c : m.bits.col_sums()) CHECK(c == 1);
  for (std::size_t r = 0; r < 15; ++r) CHECK(m.bits.row_sum(r) == 2);

  const Workbench w9(9);
  const auto a = w9.submatrix({PlaneType::Gamma, LineType::Axis, 0});
  CHECK(a.bits.rows() == 1);
  CHECK(a.bits.cols() == 10);
  CHECK(a.bits.count() == 10);

  const Workbench w7(7);
  const auto z = w7.submatrix({PlaneType::Gamma, LineType::IC, 0});
  CHECK(z.bits.rows() == 21);
  CHECK(z.bits.cols() == 8);
  CHECK(z.bits.count() == 0);
}

TEST_CASE("exact statistics") {
  const Workbench w5(5);
  auto s = incidence::stats(w5.submatrix({PlaneType::ThreeC, LineType::RC, 0}));
  CHECK(s.lambda == 3);
  CHECK(s.pi == Rational(4));
  CHECK(s.pi_exact == 4);

  const Workbench w9(9);
  s = incidence::stats(w9.submatrix({PlaneType::TwoC, LineType::EA, 0}));
  CHECK(s.lambda == 8);
  CHECK(s.pi == Rational(9, 10));
  CHECK(!s.rows_uniform);

  const Workbench w8(8);
  s = incidence::stats(w8.submatrix({PlaneType::TwoC, LineType::UGamma, 1}));
  CHECK(s.pi == Rational(8));
  CHECK(s.lambda == 1);
}

TEST_CASE("invalid selectors") {
  const Workbench w5(5);
  try {
    w5.submatrix({PlaneType::Gamma, LineType::EA, 0});
    FAIL("EA accepted for q = 5");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidSelector);
  }
  CHECK_THROWS_AS(w5.submatrix({PlaneType::Gamma, LineType::RC, 2}), Error);
  CHECK_THROWS_AS(w5.submatrix({PlaneType::Gamma, LineType::RC, -1}), Error);
}

TEST_CASE("non-uniform columns are rejected") {
  BitMatrix m(2, 2);
  m.set(0, 0);
  m.set(1, 0);
  m.set(0, 1);
  try {
    incidence::stats(m);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonUniformColumns);
  }
}

TEST_CASE("identity block decomposition") {
  BitMatrix m(3, 6);
  for (std::size_t r = 0; r < 3; ++r) {
    m.set(r, (r + 1) % 3);
    m.set(r, 3 + r);
  }
  CHECK(incidence::identity_blocks(m) == 2u);
  m.set(0, 4);
  CHECK(!incidence::identity_blocks(m));
  const Workbench w8(8);
  const auto g = w8.submatrix({PlaneType::Gamma, LineType::UGamma, 0});
  CHECK(incidence::identity_blocks(g.bits.transposed()) == 8u);
}

TEST_CASE("serial and parallel submatrices agree") {
  const Workbench wb(7);
  for (auto t : classify::line_types_for(wb.xi()))
    for (auto pi : classify::kPlaneTypes) {
      const auto a = incidence::build_submatrix(wb.taxonomy(), wb.pencils(), {pi, t, 0}, kernels::Exec::Serial);
      const auto b = incidence::build_submatrix(wb.taxonomy(), wb.pencils(), {pi, t, 0}, kernels::Exec::Parallel);
      CHECK(a.rows == b.rows);
      CHECK(a.cols == b.cols);
      CHECK(a.bits == b.bits);
    }
}
