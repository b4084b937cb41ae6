#include "cubica/incidence.hpp"

#include <charconv>

#include "cubica/error.hpp"

namespace cubica::incidence {

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::optional<Rational> parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  long long num = 0, den = 1;
  const char* end = s.data() + s.size();
  const std::size_t num_len = slash == std::string::npos ? s.size() : slash;
  auto r = std::from_chars(s.data(), s.data() + num_len, num);
  if (r.ec != std::errc{} || r.ptr != s.data() + num_len) return std::nullopt;
  if (slash != std::string::npos) {
    r = std::from_chars(s.data() + slash + 1, end, den);
    if (r.ec != std::errc{} || r.ptr != end || den == 0) return std::nullopt;
  }
  return Rational(num, den);
}

std::string to_string(const Selector& s) {
  std::string out = std::string(classify::name(s.pi)) + "," + std::string(classify::name(s.lambda));
  if (s.orbit > 0) out += std::to_string(s.orbit);
  return out;
}

IncidenceSubmatrix build_submatrix(const Taxonomy& tax, std::span<const PlaneId> pencils, const Selector& sel,
                                   kernels::Exec exec) {
  if (!classify::valid_for(sel.lambda, tax.xi())) {
    throw Error(Errc::InvalidSelector, std::string(classify::name(sel.lambda)) + " lines need " +
                                           (tax.xi() == 0 ? "q prime to 3" : "3 | q") + ", got q = " +
                                           std::to_string(tax.q()));
  }
  if (sel.orbit < 0 || sel.orbit > tax.orbit_count(sel.lambda)) {
    throw Error(Errc::InvalidSelector, "orbit " + std::to_string(sel.orbit) + " of " +
                                           std::string(classify::name(sel.lambda)) + " out of range 1.." +
                                           std::to_string(tax.orbit_count(sel.lambda)));
  }
  IncidenceSubmatrix m;
  m.sel = sel;
  m.rows = sel.orbit == 0 ? tax.lines_of(sel.lambda) : tax.lines_of(sel.lambda, sel.orbit);
  m.cols = tax.planes_of(sel.pi);
  std::vector<std::int32_t> col_of(tax.plane_labels().size(), -1);
  for (std::size_t c = 0; c < m.cols.size(); ++c) col_of[m.cols[c].value] = static_cast<std::int32_t>(c);
  m.bits = BitMatrix(m.rows.size(), m.cols.size());
  const std::size_t width = static_cast<std::size_t>(tax.q()) + 1;
  kernels::for_each_index(m.rows.size(), exec, [&](std::size_t r) {
    for (PlaneId pi : pencils.subspan(m.rows[r].value * width, width)) {
      const std::int32_t c = col_of[pi.value];
      if (c >= 0) m.bits.set(r, static_cast<std::size_t>(c));
    }
  });
  return m;
}

IncidenceStats stats(const BitMatrix& bits) {
  IncidenceStats s;
  s.rows = static_cast<long long>(bits.rows());
  s.cols = static_cast<long long>(bits.cols());
  const auto cs = bits.col_sums();
  for (std::size_t c = 0; c < cs.size(); ++c) {
    if (cs[c] != cs[0]) {
      throw Error(Errc::NonUniformColumns, "column " + std::to_string(c) + " has sum " + std::to_string(cs[c]) +
                                               ", column 0 has " + std::to_string(cs[0]));
    }
  }
  s.lambda = cs.empty() ? 0 : static_cast<long long>(cs[0]);
  s.ones = static_cast<long long>(bits.count());
  s.pi = s.rows == 0 ? Rational(0) : Rational(s.ones, s.rows);
  s.rows_uniform = true;
  for (std::size_t r = 1; r < bits.rows(); ++r)
    if (bits.row_sum(r) != bits.row_sum(0)) {
      s.rows_uniform = false;
      break;
    }
  if (s.rows_uniform && s.rows > 0) s.pi_exact = static_cast<long long>(bits.row_sum(0));
  return s;
}

IncidenceStats stats(const IncidenceSubmatrix& m) { return stats(m.bits); }

std::optional<std::size_t> identity_blocks(const BitMatrix& m) {
  if (m.rows() == 0) return std::nullopt;
  const std::size_t k = m.row_sum(0);
  if (k == 0 || m.cols() != k * m.rows()) return std::nullopt;
  // Block b takes the b-th column of every row.
  std::vector<std::int32_t> block_of(m.cols(), -1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto support = m.row_support(r);
    if (support.size() != k) return std::nullopt;
    for (std::size_t b = 0; b < k; ++b) {
      if (block_of[support[b]] >= 0) return std::nullopt;
      block_of[support[b]] = static_cast<std::int32_t>(b);
    }
  }
  // Each block now has one column per row and each column lies in one row.
  std::vector<std::size_t> per_block(k, 0);
  for (auto b : block_of) {
    if (b < 0) return std::nullopt;
    ++per_block[b];
  }
  for (auto n : per_block)
    if (n != m.rows()) return std::nullopt;
  return k;
}

}  // namespace cubica::incidence
