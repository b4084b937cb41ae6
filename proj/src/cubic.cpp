#include "cubica/cubic.hpp"

#include <algorithm>
#include <stdexcept>

#include "cubica/error.hpp"

namespace cubica::cubic {
namespace {

using gf::Elem;
using gf::ExtElem;
using ExtVec4 = std::array<ExtElem, 4>;

// Rational points x + x^σ and w x + (w x)^σ of a conjugate pair.
std::array<Vec4, 2> rational_pair(const gf::QuadraticExtension& ext, const ExtVec4& x) {
  const ExtElem w = ext.root();
  std::array<Vec4, 2> out{};
  for (int i = 0; i < 4; ++i) {
    const ExtElem wx = ext.mul(w, x[i]);
    out[0][i] = ext.to_subfield(ext.add(x[i], ext.frobenius(x[i])));
    out[1][i] = ext.to_subfield(ext.add(wx, ext.frobenius(wx)));
  }
  return out;
}

// One representative t of each conjugate pair {t, t^q} outside GF(q).
std::vector<ExtElem> conjugate_representatives(const gf::QuadraticExtension& ext) {
  std::vector<ExtElem> out;
  for (int code = ext.q(); code < ext.order(); ++code) {
    const ExtElem t = ext.element(code);
    if (t.code < ext.frobenius(t).code) out.push_back(t);
  }
  return out;
}

void sort_unique(std::vector<LineId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Vec4 curve_point(const gf::Field& f, int k) {
  if (k == f.q()) return Vec4{f.one(), f.zero(), f.zero(), f.zero()};
  const Elem t = f.element(k);
  const Elem t2 = f.mul(t, t);
  return Vec4{f.mul(t2, t), t2, t, f.one()};
}

Vec4 osculating_vector(const gf::Field& f, int k) {
  if (k == f.q()) return Vec4{f.zero(), f.zero(), f.zero(), f.one()};
  const Elem t = f.element(k);
  const Elem three = f.from_int(3);
  const Elem t2 = f.mul(t, t);
  return Vec4{f.one(), f.neg(f.mul(three, t)), f.mul(three, t2), f.neg(f.mul(t2, t))};
}

NullPolarity::NullPolarity(const SpaceModel& space) : space_(&space) {
  const gf::Field& f = space.field();
  if (f.xi() == 0) {
    throw Error(Errc::PolarityUndefined, "null polarity needs q prime to 3, got q = " + std::to_string(f.q()));
  }
  three_ = f.from_int(3);
  third_ = f.inv(three_);
  line_map_.resize(space.num_lines());
  for (std::uint32_t i = 0; i < space.num_lines(); ++i) {
    const auto& l = space.line(LineId{i});
    line_map_[i] = space.plane_meet(point_to_plane(space.point(l.a)), point_to_plane(space.point(l.b)));
  }
}

Vec4 NullPolarity::point_to_plane(const Vec4& x) const {
  const gf::Field& f = space_->field();
  return Vec4{x[3], f.neg(f.mul(three_, x[2])), f.mul(three_, x[1]), f.neg(x[0])};
}

Vec4 NullPolarity::plane_to_point(const Vec4& c) const {
  const gf::Field& f = space_->field();
  return Vec4{f.neg(c[3]), f.mul(third_, c[2]), f.neg(f.mul(third_, c[1])), c[0]};
}

PlaneId NullPolarity::point_to_plane(PointId p) const {
  return space_->plane_id(point_to_plane(space_->point(p)));
}

PointId NullPolarity::plane_to_point(PlaneId pi) const {
  return space_->point_id(plane_to_point(space_->plane(pi)));
}

CubicModel::CubicModel(const SpaceModel& space) : space_(&space) {
  const gf::Field& f = space.field();
  const int q = f.q();
  param_of_point_.assign(space.num_points(), -1);
  param_of_plane_.assign(space.num_planes(), -1);
  for (int k = 0; k <= q; ++k) {
    const PointId p = space.point_id(curve_point(f, k));
    const PlaneId pi = space.plane_id(osculating_vector(f, k));
    points_.push_back(p);
    osculating_.push_back(pi);
    param_of_point_[p.value] = k;
    param_of_plane_[pi.value] = k;
    if (k == q) {
      tangents_.push_back(space.line_through(Vec4{f.one(), f.zero(), f.zero(), f.zero()},
                                             Vec4{f.zero(), f.one(), f.zero(), f.zero()}));
    } else {
      const Elem t = f.element(k);
      const Vec4 d{f.mul(f.from_int(3), f.mul(t, t)), f.mul(f.from_int(2), t), f.one(), f.zero()};
      tangents_.push_back(space.line_through(curve_point(f, k), d));
    }
  }
  build_chords();

  if (f.xi() != 0) {
    polarity_.emplace(space);
    for (LineId l : real_chords_) real_axes_.push_back(polarity_->line_to_line(l));
    for (LineId l : imaginary_chords_) imaginary_axes_.push_back(polarity_->line_to_line(l));
    sort_unique(real_axes_);
    sort_unique(imaginary_axes_);
  } else {
    axis_line_ = space.plane_meet(osculating_[0], osculating_[q]);
  }
}

void CubicModel::build_chords() {
  const SpaceModel& space = *space_;
  const int q = space.q();
  for (int i = 0; i <= q; ++i)
    for (int j = i + 1; j <= q; ++j) real_chords_.push_back(space.line_through(points_[i], points_[j]));

  const auto& ext = space.field().extension();
  for (ExtElem t : conjugate_representatives(ext)) {
    const ExtElem t2 = ext.mul(t, t);
    const auto basis = rational_pair(ext, ExtVec4{ext.mul(t2, t), t2, t, ext.element(1)});
    imaginary_chords_.push_back(space.line_through(basis[0], basis[1]));
  }
  sort_unique(real_chords_);
  sort_unique(imaginary_chords_);

  chord_kind_.assign(space.num_lines(), ChordKind::None);
  chord_of_point_.assign(space.num_points(), -1);
  auto mark = [&](const std::vector<LineId>& lines, ChordKind kind) {
    std::vector<PointId> pts(q + 1);
    for (LineId l : lines) {
      if (chord_kind_[l.value] != ChordKind::None) throw std::logic_error("line carries two chord kinds");
      chord_kind_[l.value] = kind;
      space.points_on(l, pts);
      for (PointId p : pts) {
        if (on_cubic(p)) continue;
        if (chord_of_point_[p.value] >= 0) throw std::logic_error("two chords meet off the cubic");
        chord_of_point_[p.value] = static_cast<std::int32_t>(l.value);
      }
    }
  };
  mark(real_chords_, ChordKind::Real);
  mark(tangents_, ChordKind::Tangent);
  mark(imaginary_chords_, ChordKind::Imaginary);
}

LineId CubicModel::chord_through_point(PointId p) const {
  if (on_cubic(p)) throw Error(Errc::PointOnCubic, "point lies on the cubic");
  const std::int32_t l = chord_of_point_[p.value];
  if (l < 0) throw std::logic_error("point on no chord");
  return LineId{static_cast<std::uint32_t>(l)};
}

const NullPolarity& CubicModel::polarity() const {
  if (!polarity_) {
    throw Error(Errc::PolarityUndefined, "null polarity needs q prime to 3, got q = " + std::to_string(q()));
  }
  return *polarity_;
}

DirectAxes axes_from_osculating_planes(const CubicModel& cubic) {
  DirectAxes out;
  if (!cubic.has_polarity()) return out;
  const SpaceModel& space = cubic.space();
  const int q = space.q();
  for (int i = 0; i <= q; ++i)
    for (int j = i + 1; j <= q; ++j)
      out.real.push_back(space.plane_meet(cubic.osculating_plane(i), cubic.osculating_plane(j)));

  const auto& ext = space.field().extension();
  const ExtElem three = ext.embed(space.field().from_int(3));
  for (ExtElem t : conjugate_representatives(ext)) {
    const ExtElem t2 = ext.mul(t, t);
    const ExtVec4 plane{ext.element(1), ext.neg(ext.mul(three, t)), ext.mul(three, t2), ext.neg(ext.mul(t2, t))};
    const auto pencil = rational_pair(ext, plane);
    out.imaginary.push_back(space.plane_meet(pencil[0], pencil[1]));
  }
  sort_unique(out.real);
  sort_unique(out.imaginary);
  return out;
}

}  // namespace cubica::cubic
