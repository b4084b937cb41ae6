#pragma once

// Finite fields GF(q), q = p^e <= 16, and the quadratic extension GF(q^2).
//
// Elements are dense coefficient vectors over GF(p) packed into a single
// byte: the element with coefficients (c_0, ..., c_{e-1}) has code
// sum c_i p^i. Code 0 is zero and code 1 is one. GF(q^2) is built as
// GF(q)[w]/(w^2 + c_1 w + c_0); the element a_0 + a_1 w has code a_0 + q a_1,
// so the subfield embedding is the identity on codes below q.

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace cubica::gf {

inline constexpr int kDefaultMaxQ = 16;

struct Elem {
  std::uint8_t code = 0;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

struct ExtElem {
  std::uint8_t code = 0;
  friend constexpr auto operator<=>(ExtElem, ExtElem) = default;
};

struct FieldSpec {
  int p = 0;
  int e = 0;
  int q = 0;
  // Monic irreducible modulus over GF(p), low degree first: c_0, ..., c_e = 1.
  std::vector<int> modulus;

  // q mod 3 as -1, 0 or +1.
  int xi() const;
  // q mod 4 as -1 or +1 for odd q; 0 for even q.
  int beta() const;
};

// Monic x^2 + c_1 x + c_0 over GF(q).
struct ExtensionSpec {
  int q = 0;
  Elem c0;
  Elem c1;
};

class QuadraticExtension;

class Field {
 public:
  // Throws Error{NotAPrimePower} or Error{BoundExceeded}.
  static Field make(int q, int max_q = kDefaultMaxQ);

  const FieldSpec& spec() const { return spec_; }
  int q() const { return spec_.q; }
  int p() const { return spec_.p; }
  int xi() const { return spec_.xi(); }
  int beta() const { return spec_.beta(); }
  bool odd() const { return spec_.p != 2; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  Elem element(int code) const;
  // Image of an integer in the prime subfield.
  Elem from_int(long n) const;
  std::vector<int> coeffs(Elem a) const;
  std::vector<Elem> elements() const;

  Elem add(Elem a, Elem b) const { return Elem{add_[a.code * q() + b.code]}; }
  Elem mul(Elem a, Elem b) const { return Elem{mul_[a.code * q() + b.code]}; }
  Elem neg(Elem a) const { return Elem{neg_[a.code]}; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  // Throws std::domain_error on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long n) const;

  bool is_square(Elem a) const { return square_[a.code] != 0; }
  // Throws Error{EvenCharacteristic} for even q.
  int quadratic_character(Elem a) const;
  // Both roots when a is a square (equal when a = 0), absent otherwise.
  std::optional<std::pair<Elem, Elem>> sqrt(Elem a) const;
  // Least non-square in code order; absent for even q.
  std::optional<Elem> least_nonsquare() const;

  const QuadraticExtension& extension() const { return *ext_; }

 private:
  Field() = default;

  FieldSpec spec_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::uint8_t> inv_;
  std::vector<std::uint8_t> square_;
  std::shared_ptr<const QuadraticExtension> ext_;
};

class QuadraticExtension {
 public:
  explicit QuadraticExtension(const Field& base);

  const ExtensionSpec& spec() const { return spec_; }
  int q() const { return spec_.q; }
  int order() const { return spec_.q * spec_.q; }

  ExtElem element(int code) const;
  ExtElem embed(Elem a) const { return ExtElem{a.code}; }
  bool in_subfield(ExtElem a) const { return a.code < q(); }
  // Precondition: in_subfield(a).
  Elem to_subfield(ExtElem a) const;
  // The class of w: generates GF(q^2) over GF(q).
  ExtElem root() const { return ExtElem{static_cast<std::uint8_t>(q())}; }

  ExtElem add(ExtElem a, ExtElem b) const { return ExtElem{add_[a.code * order() + b.code]}; }
  ExtElem mul(ExtElem a, ExtElem b) const { return ExtElem{mul_[a.code * order() + b.code]}; }
  ExtElem neg(ExtElem a) const { return ExtElem{neg_[a.code]}; }
  ExtElem sub(ExtElem a, ExtElem b) const { return add(a, neg(b)); }
  ExtElem inv(ExtElem a) const;
  ExtElem pow(ExtElem a, long n) const;
  // a^q.
  ExtElem frobenius(ExtElem a) const { return ExtElem{frob_[a.code]}; }
  std::optional<std::pair<ExtElem, ExtElem>> sqrt(ExtElem a) const;
  // Some generator of the multiplicative group, least in code order.
  ExtElem primitive_element() const;

 private:
  ExtensionSpec spec_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::uint8_t> inv_;
  std::vector<std::uint8_t> frob_;
};

// Least monic irreducible polynomial of degree e over GF(p), ordered by the
// integer sum c_i p^i of its lower coefficients. Low degree first.
std::vector<int> least_irreducible(int p, int e);
bool is_irreducible(int p, const std::vector<int>& poly);

// Counts over c in GF(q)^* for f(c) = -(4/3)c^2 - 3: number of roots and
// number of values that are non-squares. Throws Error{BadModulus} unless q is
// odd and prime to 3.
struct CharacterCounts {
  int roots = 0;
  int nonsquares = 0;
};
CharacterCounts character_value_counts(const Field& field);

}  // namespace cubica::gf
