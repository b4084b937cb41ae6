#include "cubica/gf.hpp"

#include <stdexcept>
#include <string>

#include "cubica/error.hpp"

namespace cubica::gf {
namespace {

using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int inverse_mod(int a, int p) {
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  throw std::domain_error("no inverse mod p");
}

// Remainder of a modulo m over GF(p); m must be nonzero.
Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  const int lead_inv = inverse_mod(m.back(), p);
  while (static_cast<int>(a.size()) - 1 >= dm && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int factor = a.back() * lead_inv % p;
    for (int i = 0; i <= dm; ++i) {
      a[shift + i] = ((a[shift + i] - factor * m[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

Poly digits(int code, int p, int e) {
  Poly c(e, 0);
  for (int i = 0; i < e; ++i) {
    c[i] = code % p;
    code /= p;
  }
  return c;
}

int pack(const Poly& c, int p, int e) {
  int code = 0;
  for (int i = e - 1; i >= 0; --i) code = code * p + (i < static_cast<int>(c.size()) ? c[i] : 0);
  return code;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

int FieldSpec::xi() const {
  const int r = q % 3;
  return r == 2 ? -1 : r;
}

int FieldSpec::beta() const {
  if (q % 2 == 0) return 0;
  return q % 4 == 1 ? 1 : -1;
}

bool is_irreducible(int p, const std::vector<int>& poly) {
  Poly f = poly;
  trim(f);
  const int d = static_cast<int>(f.size()) - 1;
  if (d < 1) return false;
  if (d == 1) return true;
  // Trial division by every monic polynomial of degree 1..d/2.
  for (int k = 1; k <= d / 2; ++k) {
    int count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (int n = 0; n < count; ++n) {
      Poly g = digits(n, p, k);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<int> least_irreducible(int p, int e) {
  if (e == 1) return {0, 1};
  int count = 1;
  for (int i = 0; i < e; ++i) count *= p;
  for (int n = 0; n < count; ++n) {
    Poly f = digits(n, p, e);
    f.push_back(1);
    if (is_irreducible(p, f)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

Field Field::make(int q, int max_q) {
  if (q < 2) throw Error(Errc::NotAPrimePower, std::to_string(q) + " is not a prime power");
  int p = 2;
  while (q % p != 0) ++p;
  int e = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1 || !is_prime(p)) {
    throw Error(Errc::NotAPrimePower, std::to_string(q) + " is not a prime power");
  }
  if (q > max_q) {
    throw Error(Errc::BoundExceeded,
                "q = " + std::to_string(q) + " exceeds the configured bound " + std::to_string(max_q));
  }

  Field f;
  f.spec_ = FieldSpec{p, e, q, least_irreducible(p, e)};
  f.add_.resize(q * q);
  f.mul_.resize(q * q);
  f.neg_.resize(q);
  f.inv_.resize(q);
  f.square_.assign(q, 0);

  for (int a = 0; a < q; ++a) {
    const Poly ca = digits(a, p, e);
    Poly na(e);
    for (int i = 0; i < e; ++i) na[i] = (p - ca[i]) % p;
    f.neg_[a] = static_cast<std::uint8_t>(pack(na, p, e));
    for (int b = 0; b < q; ++b) {
      const Poly cb = digits(b, p, e);
      Poly sum(e);
      for (int i = 0; i < e; ++i) sum[i] = (ca[i] + cb[i]) % p;
      f.add_[a * q + b] = static_cast<std::uint8_t>(pack(sum, p, e));

      Poly prod(2 * e - 1, 0);
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
      if (e > 1) prod = poly_mod(prod, f.spec_.modulus, p);
      f.mul_[a * q + b] = static_cast<std::uint8_t>(pack(prod, p, e));
    }
  }
  for (int a = 1; a < q; ++a) {
    for (int b = 1; b < q; ++b) {
      if (f.mul_[a * q + b] == 1) {
        f.inv_[a] = static_cast<std::uint8_t>(b);
        break;
      }
    }
    f.square_[f.mul_[a * q + a]] = 1;
  }
  f.square_[0] = 1;
  f.ext_ = std::make_shared<const QuadraticExtension>(f);
  return f;
}

Elem Field::element(int code) const {
  if (code < 0 || code >= q()) throw std::out_of_range("field element code out of range");
  return Elem{static_cast<std::uint8_t>(code)};
}

Elem Field::from_int(long n) const {
  const long r = ((n % p()) + p()) % p();
  return Elem{static_cast<std::uint8_t>(r)};
}

std::vector<int> Field::coeffs(Elem a) const { return digits(a.code, spec_.p, spec_.e); }

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out;
  out.reserve(q());
  for (int c = 0; c < q(); ++c) out.push_back(Elem{static_cast<std::uint8_t>(c)});
  return out;
}

Elem Field::inv(Elem a) const {
  if (a.code == 0) throw std::domain_error("inverse of zero");
  return Elem{inv_[a.code]};
}

Elem Field::pow(Elem a, long n) const {
  if (n < 0) return pow(inv(a), -n);
  Elem r = one();
  while (n > 0) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

int Field::quadratic_character(Elem a) const {
  if (!odd()) {
    throw Error(Errc::EvenCharacteristic, "quadratic character is undefined for even q");
  }
  if (a.code == 0) return 0;
  return is_square(a) ? 1 : -1;
}

std::optional<std::pair<Elem, Elem>> Field::sqrt(Elem a) const {
  std::optional<Elem> first;
  for (int c = 0; c < q(); ++c) {
    const Elem r{static_cast<std::uint8_t>(c)};
    if (mul(r, r) == a) {
      if (!first) {
        first = r;
      } else {
        return std::pair{*first, r};
      }
    }
  }
  if (first) return std::pair{*first, *first};
  return std::nullopt;
}

std::optional<Elem> Field::least_nonsquare() const {
  for (int c = 1; c < q(); ++c)
    if (!square_[c]) return Elem{static_cast<std::uint8_t>(c)};
  return std::nullopt;
}

QuadraticExtension::QuadraticExtension(const Field& base) {
  const int q = base.q();
  spec_.q = q;
  bool found = false;
  for (int n = 0; n < q * q && !found; ++n) {
    const Elem c0{static_cast<std::uint8_t>(n % q)};
    const Elem c1{static_cast<std::uint8_t>(n / q)};
    bool has_root = false;
    for (Elem r : base.elements()) {
      if (base.add(base.add(base.mul(r, r), base.mul(c1, r)), c0) == base.zero()) {
        has_root = true;
        break;
      }
    }
    if (!has_root) {
      spec_.c0 = c0;
      spec_.c1 = c1;
      found = true;
    }
  }
  if (!found) throw std::logic_error("no irreducible quadratic found");

  const int n = q * q;
  add_.resize(n * n);
  mul_.resize(n * n);
  neg_.resize(n);
  inv_.assign(n, 0);
  frob_.resize(n);
  auto lo = [q](int code) { return Elem{static_cast<std::uint8_t>(code % q)}; };
  auto hi = [q](int code) { return Elem{static_cast<std::uint8_t>(code / q)}; };
  auto code_of = [q](Elem a0, Elem a1) { return static_cast<std::uint8_t>(a0.code + q * a1.code); };

  for (int a = 0; a < n; ++a) {
    neg_[a] = code_of(base.neg(lo(a)), base.neg(hi(a)));
    for (int b = 0; b < n; ++b) {
      add_[a * n + b] = code_of(base.add(lo(a), lo(b)), base.add(hi(a), hi(b)));
      // (a0 + a1 w)(b0 + b1 w) with w^2 = -c1 w - c0.
      const Elem a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
      const Elem t = base.mul(a1, b1);
      const Elem r0 = base.sub(base.mul(a0, b0), base.mul(t, spec_.c0));
      const Elem r1 = base.sub(base.add(base.mul(a0, b1), base.mul(a1, b0)), base.mul(t, spec_.c1));
      mul_[a * n + b] = code_of(r0, r1);
    }
  }
  for (int a = 1; a < n; ++a) {
    for (int b = 1; b < n; ++b) {
      if (mul_[a * n + b] == 1) {
        inv_[a] = static_cast<std::uint8_t>(b);
        break;
      }
    }
  }
  for (int a = 0; a < n; ++a) frob_[a] = pow(ExtElem{static_cast<std::uint8_t>(a)}, q).code;
}

ExtElem QuadraticExtension::element(int code) const {
  if (code < 0 || code >= order()) throw std::out_of_range("extension element code out of range");
  return ExtElem{static_cast<std::uint8_t>(code)};
}

Elem QuadraticExtension::to_subfield(ExtElem a) const {
  if (!in_subfield(a)) throw std::domain_error("element is not in the subfield");
  return Elem{a.code};
}

ExtElem QuadraticExtension::inv(ExtElem a) const {
  if (a.code == 0) throw std::domain_error("inverse of zero");
  return ExtElem{inv_[a.code]};
}

ExtElem QuadraticExtension::pow(ExtElem a, long n) const {
  if (n < 0) return pow(inv(a), -n);
  ExtElem r{1};
  while (n > 0) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

std::optional<std::pair<ExtElem, ExtElem>> QuadraticExtension::sqrt(ExtElem a) const {
  std::optional<ExtElem> first;
  for (int c = 0; c < order(); ++c) {
    const ExtElem r{static_cast<std::uint8_t>(c)};
    if (mul(r, r) == a) {
      if (!first) {
        first = r;
      } else {
        return std::pair{*first, r};
      }
    }
  }
  if (first) return std::pair{*first, *first};
  return std::nullopt;
}

ExtElem QuadraticExtension::primitive_element() const {
  const int group_order = order() - 1;
  for (int c = 2; c < order(); ++c) {
    ExtElem g{static_cast<std::uint8_t>(c)};
    ExtElem x = g;
    int k = 1;
    while (x.code != 1) {
      x = mul(x, g);
      ++k;
    }
    if (k == group_order) return g;
  }
  throw std::logic_error("no primitive element found");
}

CharacterCounts character_value_counts(const Field& field) {
  if (!field.odd() || field.xi() == 0) {
    throw Error(Errc::BadModulus, "requires odd q prime to 3, got q = " + std::to_string(field.q()));
  }
  // f(c) = -(4/3) c^2 - 3
  const Elem k = field.neg(field.div(field.from_int(4), field.from_int(3)));
  const Elem three = field.from_int(3);
  CharacterCounts out;
  for (int code = 1; code < field.q(); ++code) {
    const Elem c = field.element(code);
    const Elem value = field.sub(field.mul(k, field.mul(c, c)), three);
    if (value == field.zero()) {
      ++out.roots;
    } else if (field.quadratic_character(value) == -1) {
      ++out.nonsquares;
    }
  }
  return out;
}

}  // namespace cubica::gf
