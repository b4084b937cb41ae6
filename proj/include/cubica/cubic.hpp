#pragma once

// The twisted cubic C = {P(t) : t in F_q ∪ {∞}}, its osculating planes Γ,
// tangents, chords, axes, and the null polarity.
//
// Parameters are indexed 0..q: index k < q is t = element(k), index q is ∞.

#include <cstdint>
#include <optional>
#include <vector>

#include "cubica/pg3.hpp"

namespace cubica::cubic {

using pg3::LineId;
using pg3::PlaneId;
using pg3::PointId;
using pg3::SpaceModel;
using pg3::Vec4;

enum class ChordKind : std::uint8_t { None, Real, Tangent, Imaginary };

// Coordinates for a parameter index k in 0..q.
Vec4 curve_point(const gf::Field& f, int k);
Vec4 osculating_vector(const gf::Field& f, int k);

// The correlation x -> π(x3, -3x2, 3x1, -x0). Needs q prime to 3.
class NullPolarity {
 public:
  // Throws Error{PolarityUndefined} when 3 | q.
  explicit NullPolarity(const SpaceModel& space);

  Vec4 point_to_plane(const Vec4& x) const;
  Vec4 plane_to_point(const Vec4& c) const;
  PlaneId point_to_plane(PointId p) const;
  PointId plane_to_point(PlaneId pi) const;
  // Meet of the polar planes of two points spanning the line.
  LineId line_to_line(LineId l) const { return line_map_[l.value]; }

 private:
  const SpaceModel* space_;
  gf::Elem three_;
  gf::Elem third_;
  std::vector<LineId> line_map_;
};

class CubicModel {
 public:
  explicit CubicModel(const SpaceModel& space);

  const SpaceModel& space() const { return *space_; }
  int q() const { return space_->q(); }
  int xi() const { return space_->field().xi(); }

  const std::vector<PointId>& points() const { return points_; }
  const std::vector<PlaneId>& osculating_planes() const { return osculating_; }
  const std::vector<LineId>& tangents() const { return tangents_; }
  PointId point(int k) const { return points_[k]; }
  PlaneId osculating_plane(int k) const { return osculating_[k]; }
  LineId tangent_line(int k) const { return tangents_[k]; }

  // Parameter index of a cubic point, or -1.
  int param_of(PointId p) const { return param_of_point_[p.value]; }
  bool on_cubic(PointId p) const { return param_of(p) >= 0; }
  // Index of an osculating plane, or -1.
  int param_of_plane(PlaneId pi) const { return param_of_plane_[pi.value]; }

  const std::vector<LineId>& real_chords() const { return real_chords_; }
  const std::vector<LineId>& imaginary_chords() const { return imaginary_chords_; }
  ChordKind chord_kind(LineId l) const { return chord_kind_[l.value]; }
  // Throws Error{PointOnCubic}.
  LineId chord_through_point(PointId p) const;

  bool has_polarity() const { return polarity_.has_value(); }
  // Throws Error{PolarityUndefined} when 3 | q.
  const NullPolarity& polarity() const;
  // Images of the chords under the polarity; empty when 3 | q.
  const std::vector<LineId>& real_axes() const { return real_axes_; }
  const std::vector<LineId>& imaginary_axes() const { return imaginary_axes_; }
  // Common line of all osculating planes; present only when 3 | q.
  std::optional<LineId> axis_line() const { return axis_line_; }

 private:
  void build_chords();

  const SpaceModel* space_;
  std::vector<PointId> points_;
  std::vector<PlaneId> osculating_;
  std::vector<LineId> tangents_;
  std::vector<std::int32_t> param_of_point_;
  std::vector<std::int32_t> param_of_plane_;
  std::vector<LineId> real_chords_;
  std::vector<LineId> imaginary_chords_;
  std::vector<ChordKind> chord_kind_;
  std::vector<std::int32_t> chord_of_point_;
  std::optional<NullPolarity> polarity_;
  std::vector<LineId> real_axes_;
  std::vector<LineId> imaginary_axes_;
  std::optional<LineId> axis_line_;
};

// Axes built directly from osculating planes: meets of two real planes, and
// the rational lines under pairs of conjugate planes over GF(q^2). Used to
// cross-check the polarity images.
struct DirectAxes {
  std::vector<LineId> real;
  std::vector<LineId> imaginary;
};
DirectAxes axes_from_osculating_planes(const CubicModel& cubic);

}  // namespace cubica::cubic
