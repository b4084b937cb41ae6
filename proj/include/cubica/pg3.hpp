#pragma once

// The projective space PG(3,q): points, planes and lines with dense ids.
//
// Points and planes are 4-vectors normalized so the leftmost nonzero entry is
// one; ids follow the lexicographic order of the normalized vectors (by
// element code), so the point and the plane with the same coordinates share
// an id value. Lines are keyed by normalized Pluecker coordinates
// (p01, p02, p03, p12, p13, p23) and numbered in lexicographic key order.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "cubica/gf.hpp"

namespace cubica::pg3 {

using gf::Elem;
using gf::Field;

using Vec4 = std::array<Elem, 4>;
using Pluecker = std::array<Elem, 6>;

template <class Tag>
struct Id {
  std::uint32_t value = 0;
  friend constexpr auto operator<=>(Id, Id) = default;
};

using PointId = Id<struct PointTag>;
using PlaneId = Id<struct PlaneTag>;
using LineId = Id<struct LineTag>;

struct ProjLine {
  Pluecker key;
  // Two points spanning the line: the rows of the reduced echelon basis.
  PointId a;
  PointId b;
};

class SpaceModel {
 public:
  explicit SpaceModel(Field field);

  const Field& field() const { return field_; }
  int q() const { return field_.q(); }

  std::size_t num_points() const { return vectors_.size(); }
  std::size_t num_planes() const { return vectors_.size(); }
  std::size_t num_lines() const { return lines_.size(); }

  const Vec4& point(PointId id) const { return vectors_[id.value]; }
  const Vec4& plane(PlaneId id) const { return vectors_[id.value]; }
  const ProjLine& line(LineId id) const { return lines_[id.value]; }

  // Scales so the leftmost nonzero entry is one. Throws std::domain_error on
  // the zero vector.
  Vec4 normalize(const Vec4& v) const;
  PointId point_id(const Vec4& v) const;
  PlaneId plane_id(const Vec4& v) const;
  LineId line_id(const Pluecker& key) const;

  Elem dot(const Vec4& x, const Vec4& c) const;
  Pluecker pluecker(const Vec4& u, const Vec4& v) const;
  // Bilinear pairing of Pluecker vectors: zero iff the lines are coplanar.
  Elem pluecker_pairing(const Pluecker& a, const Pluecker& b) const;
  bool satisfies_pluecker_relation(const Pluecker& p) const;

  bool incident(PointId p, PlaneId pi) const;
  // Throws Error{CoincidentPoints}.
  LineId line_through(PointId p, PointId r) const;
  LineId line_through(const Vec4& u, const Vec4& v) const;
  // Throws Error{CoincidentPlanes}.
  LineId plane_meet(PlaneId a, PlaneId b) const;
  LineId plane_meet(const Vec4& a, const Vec4& b) const;
  bool line_in_plane(LineId l, PlaneId pi) const;
  bool lines_meet(LineId a, LineId b) const;

  // q+1 entries each.
  std::vector<PointId> points_on(LineId l) const;
  std::vector<PlaneId> planes_through(LineId l) const;
  void points_on(LineId l, std::span<PointId> out) const;
  void planes_through(LineId l, std::span<PlaneId> out) const;

 private:
  std::uint32_t vector_index(const Vec4& v) const;
  std::uint32_t pack(const Pluecker& key) const;
  // Enumerates the q+1 normalized vectors of the span of u and v.
  template <class F>
  void span_points(const Vec4& u, const Vec4& v, F&& emit) const;

  Field field_;
  std::vector<Vec4> vectors_;
  std::vector<std::int32_t> index_of_code_;  // q^4 entries, -1 if not normalized
  std::vector<ProjLine> lines_;
  std::vector<std::uint32_t> line_keys_;  // sorted packed keys
};

// Two vectors spanning the solution space of a.x = b.x = 0, in reduced
// echelon form. Throws std::domain_error if a and b are dependent.
std::array<Vec4, 2> null_space(const Field& f, const Vec4& a, const Vec4& b);

// theta_{N,q} = (q^{N+1}-1)/(q-1) and beta_{3,q} = (q^2+1)(q^2+q+1).
long theta(int n, long q);
long beta3(long q);

}  // namespace cubica::pg3
