#include "cubica/tables.hpp"

#include <array>

namespace cubica::tables {
namespace {

using Row = std::array<Rational, 5>;
using Counts = std::array<long long, 5>;

struct Entry {
  Row pi;
  Counts lambda;
};

Rational r(long long n, long long d = 1) { return Rational(n, d); }

std::optional<Entry> class_entry(LineType t, long long q, int xi) {
  const long long q2 = q * q;
  switch (t) {
    case LineType::RC: return Entry{{r(0), r(2), r(q - 1), r(0), r(0)}, {0, 1, 3, 0, 0}};
    case LineType::T: return Entry{{r(1), r(q), r(0), r(0), r(0)}, {1, 1, 0, 0, 0}};
    case LineType::IC: return Entry{{r(0), r(0), r(0), r(q + 1), r(0)}, {0, 0, 0, 1, 0}};
    case LineType::UGamma:
      return Entry{{r(1), r(1), r(q - 1, 2), r(q - 1, 2), r(0)}, {q, 1, 3, 1, 0}};
    case LineType::UnGamma:
      return Entry{{r(0), r(2), r(q - 2, 2), r(q, 2), r(0)}, {0, 2 * (q - 1), 3 * (q - 2), q, 0}};
    case LineType::RA:
      if (xi == 1) return Entry{{r(2), r(0), r(q - 1, 3), r(0), r(2 * (q - 1), 3)}, {q, 0, 1, 0, 1}};
      if (xi == -1) return Entry{{r(2), r(0), r(0), r(q - 1), r(0)}, {q, 0, 0, 1, 0}};
      return std::nullopt;
    case LineType::IA:
      if (xi == 1) return Entry{{r(0), r(0), r(0), r(q + 1), r(0)}, {0, 0, 0, 1, 0}};
      if (xi == -1) return Entry{{r(0), r(0), r(q + 1, 3), r(0), r(2 * (q + 1), 3)}, {0, 0, 1, 0, 1}};
      return std::nullopt;
    case LineType::EGamma:
      if (xi == 1)
        return Entry{{r(1), r(1), r(q - 4, 6), r(q, 2), r(q - 1, 3)}, {q2 - q, q - 1, q - 4, q, q - 1}};
      if (xi == -1)
        return Entry{{r(1), r(1), r(q - 2, 6), r(q - 2, 2), r(q + 1, 3)}, {q2 - q, q - 1, q - 2, q - 2, q + 1}};
      return std::nullopt;
    case LineType::EnGamma:
      if (xi == 1)
        return Entry{{r(0), r(1), r(q2 - 3 * q + 4, 6 * (q - 1)), r(q2 - q - 2, 2 * (q - 1)), r(q2 + 1, 3 * (q - 1))},
                     {0, (q - 1) * (q - 1), q2 - 3 * q + 4, q2 - q - 2, q2 + 1}};
      if (xi == -1)
        return Entry{{r(0), r(1), r(q - 2, 6), r(q, 2), r(q + 1, 3)},
                     {0, (q - 1) * (q - 1), q2 - 3 * q + 2, q2 - q, q2 - 1}};
      return Entry{{r(0), r(1), r(q2 - 3 * q + 3, 6 * (q - 1)), r(q2 - q - 1, 2 * (q - 1)), r(q2, 3 * (q - 1))},
                   {0, (q - 1) * (q - 1), q2 - 3 * q + 3, q2 - q - 1, q2}};
    case LineType::Axis:
      if (xi == 0) return Entry{{r(q + 1), r(0), r(0), r(0), r(0)}, {1, 0, 0, 0, 0}};
      return std::nullopt;
    case LineType::EA:
      if (xi == 0)
        return Entry{{r(1), r(q, q + 1), r(q * (q - 2), 6 * (q + 1)), r(q2, 2 * (q + 1)), r(q, 3)},
                     {q2 - 1, q - 1, q - 2, q, q + 1}};
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Entry> orbit_entry(LineType t, int j, long long q, int xi) {
  const long long q2 = q * q;
  switch (t) {
    case LineType::UGamma:
      if (j == 1) return Entry{{r(1), r(q), r(0), r(0), r(0)}, {1, 1, 0, 0, 0}};
      return Entry{{r(1), r(0), r(q, 2), r(q, 2), r(0)}, {q - 1, 0, 3, 1, 0}};
    case LineType::UnGamma:
      if (j == 1)
        return Entry{{r(0), r(1), r(q - 1, 2), r(q + 1, 2), r(0)}, {0, (q - 1) / 2, 3 * (q - 1) / 2, (q + 1) / 2, 0}};
      return Entry{{r(0), r(3), r(q - 3, 2), r(q - 1, 2), r(0)}, {0, 3 * (q - 1) / 2, 3 * (q - 3) / 2, (q - 1) / 2, 0}};
    case LineType::EGamma:
      if (xi == 1) {
        if (j == 1)
          return Entry{{r(1), r(0), r(q - 1, 6), r(q + 1, 2), r(q - 1, 3)},
                       {(q2 - q) / 2, 0, (q - 1) / 2, (q + 1) / 2, (q - 1) / 2}};
        return Entry{{r(1), r(2), r(q - 7, 6), r(q - 1, 2), r(q - 1, 3)},
                     {(q2 - q) / 2, q - 1, (q - 7) / 2, (q - 1) / 2, (q - 1) / 2}};
      }
      if (j == 1)
        return Entry{{r(1), r(0), r(q + 1, 6), r(q - 1, 2), r(q + 1, 3)},
                     {(q2 - q) / 2, 0, (q + 1) / 2, (q - 1) / 2, (q + 1) / 2}};
      return Entry{{r(1), r(2), r(q - 5, 6), r(q - 3, 2), r(q + 1, 3)},
                   {(q2 - q) / 2, q - 1, (q - 5) / 2, (q - 3) / 2, (q + 1) / 2}};
    case LineType::EA:
      if (j == 1) return Entry{{r(1), r(1), r(q - 3, 6), r(q - 1, 2), r(q, 3)}, {q2 - q, q - 1, q - 3, q - 1, q}};
      if (j == 2) return Entry{{r(1), r(0), r(q, 3), r(0), r(2 * q, 3)}, {(q - 1) / 2, 0, 1, 0, 1}};
      return Entry{{r(1), r(0), r(0), r(q), r(0)}, {(q - 1) / 2, 0, 0, 1, 0}};
    default: return std::nullopt;
  }
}

}  // namespace

int xi_of(long q) {
  const long m = q % 3;
  return m == 2 ? -1 : static_cast<int>(m);
}

long long plane_class_size(PlaneType t, long q) {
  const long long g = static_cast<long long>(q) * q * q - q;
  switch (t) {
    case PlaneType::Gamma: return q + 1;
    case PlaneType::TwoC: return static_cast<long long>(q) * q + q;
    case PlaneType::ThreeC: return g / 6;
    case PlaneType::OneCbar: return g / 2;
    case PlaneType::ZeroC: return g / 3;
  }
  return 0;
}

long long line_class_size(LineType t, long q) {
  const long long qq = q;
  const long long g = qq * qq * qq - qq;
  if (!classify::valid_for(t, xi_of(q))) return 0;
  switch (t) {
    case LineType::RC:
    case LineType::RA: return (qq * qq + qq) / 2;
    case LineType::T: return qq + 1;
    case LineType::IC:
    case LineType::IA: return (qq * qq - qq) / 2;
    case LineType::UGamma: return qq * qq + qq;
    case LineType::UnGamma:
    case LineType::EGamma: return g;
    case LineType::EnGamma: return (qq * qq - qq) * (qq * qq - 1);
    case LineType::Axis: return 1;
    case LineType::EA: return (qq + 1) * (qq * qq - 1);
  }
  return 0;
}

OrbitCount orbit_count(LineType t, long q) {
  const bool odd = q % 2 == 1;
  switch (t) {
    case LineType::UGamma: return {odd ? 1 : 2, false};
    case LineType::UnGamma:
    case LineType::EGamma: return {odd ? 2 : 1, false};
    case LineType::EnGamma: return {2, true};
    case LineType::EA: return {3, false};
    default: return {1, false};
  }
}

std::optional<Cell> table1(LineType lambda, PlaneType pi, long q) {
  const int xi = xi_of(q);
  if (!classify::valid_for(lambda, xi)) return std::nullopt;
  const auto e = class_entry(lambda, q, xi);
  if (!e) return std::nullopt;
  const auto k = static_cast<std::size_t>(pi);
  return Cell{e->pi[k], e->lambda[k]};
}

bool table2_applies(LineType lambda, long q) {
  if (q < 5) return false;
  const bool odd = q % 2 == 1;
  const int xi = xi_of(q);
  switch (lambda) {
    case LineType::UGamma: return !odd;
    case LineType::UnGamma: return odd;
    case LineType::EGamma: return odd && xi != 0;
    case LineType::EA: return xi == 0;
    default: return false;
  }
}

int table2_orbits(LineType lambda) {
  switch (lambda) {
    case LineType::UGamma:
    case LineType::UnGamma:
    case LineType::EGamma: return 2;
    case LineType::EA: return 3;
    default: return 0;
  }
}

long long table2_orbit_size(LineType lambda, int orbit, long q) {
  return classify::pinned_orbit_size(lambda, orbit, q);
}

std::optional<Cell> table2(LineType lambda, int orbit, PlaneType pi, long q) {
  if (!table2_applies(lambda, q) || orbit < 1 || orbit > table2_orbits(lambda)) return std::nullopt;
  const auto e = orbit_entry(lambda, orbit, q, xi_of(q));
  if (!e) return std::nullopt;
  const auto k = static_cast<std::size_t>(pi);
  return Cell{e->pi[k], e->lambda[k]};
}

}  // namespace cubica::tables
