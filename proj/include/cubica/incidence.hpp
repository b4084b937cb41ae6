#pragma once

// Plane-line incidence submatrices I_{π,λ} and I_{π,λj} with exact
// statistics. Rows are lines, columns are planes, both in ascending id order.

#include <boost/rational.hpp>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cubica/bitmatrix.hpp"
#include "cubica/classify.hpp"
#include "cubica/kernels.hpp"

namespace cubica::incidence {

using classify::LineType;
using classify::PlaneType;
using classify::Taxonomy;
using pg3::LineId;
using pg3::PlaneId;

using Rational = boost::rational<long long>;
// Always "a/b", lowest terms, positive denominator.
std::string to_string(const Rational& r);
// Accepts "a/b" or "a".
std::optional<Rational> parse_rational(const std::string& s);

struct Selector {
  PlaneType pi;
  LineType lambda;
  int orbit = 0;  // 0: the whole class
};
std::string to_string(const Selector& s);

struct IncidenceSubmatrix {
  Selector sel;
  std::vector<LineId> rows;
  std::vector<PlaneId> cols;
  BitMatrix bits;
};

struct IncidenceStats {
  long long lambda = 0;   // ones per column
  Rational pi;            // average ones per row
  bool rows_uniform = false;
  std::optional<long long> pi_exact;  // set when every row has the same sum
  long long ones = 0;
  long long rows = 0;
  long long cols = 0;
};

// Throws Error{InvalidSelector} if the class is not defined at this ξ or the
// orbit index is out of range.
IncidenceSubmatrix build_submatrix(const Taxonomy& tax, std::span<const PlaneId> pencils, const Selector& sel,
                                   kernels::Exec exec = kernels::Exec::Parallel);

// Throws Error{NonUniformColumns}.
IncidenceStats stats(const IncidenceSubmatrix& m);
IncidenceStats stats(const BitMatrix& bits);

// Number of permutation blocks when the matrix is a horizontal concatenation
// of identity-like blocks (every column sum 1, rows of equal sum k); absent
// otherwise. Apply to the transpose for vertical stacks.
std::optional<std::size_t> identity_blocks(const BitMatrix& m);

}  // namespace cubica::incidence
