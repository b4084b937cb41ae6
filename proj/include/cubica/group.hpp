#pragma once

// G_q as explicit 4x4 projectivities built from (a,b,c,d) in PGL(2,q), and
// orbit computation under it.
//
// Points are row vectors acted on as x -> xM. Planes are column vectors
// acted on as c -> M^{-1}c, which preserves x.c = 0.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "cubica/kernels.hpp"
#include "cubica/pg3.hpp"

namespace cubica::group {

using gf::Elem;
using gf::Field;
using pg3::LineId;
using pg3::PlaneId;
using pg3::PointId;
using pg3::SpaceModel;
using pg3::Vec4;

using Mat4 = std::array<std::array<Elem, 4>, 4>;

struct Params {
  Elem a, b, c, d;
};

struct Projectivity {
  Mat4 matrix;   // normalized: first nonzero entry in row-major order is 1
  Mat4 inverse;  // the plane action
  std::optional<Params> params;
};

// The matrix M for (a,b,c,d), unnormalized.
Mat4 matrix_from_params(const Field& f, Params p);
Mat4 multiply(const Field& f, const Mat4& x, const Mat4& y);
Mat4 normalize(const Field& f, const Mat4& m);
// Absent when m is singular.
std::optional<Mat4> invert(const Field& f, const Mat4& m);
Mat4 identity(const Field& f);

class GroupModel {
 public:
  // One element per projective class of (a,b,c,d) with ad - bc != 0, with
  // duplicate matrices removed. Elements are sorted by matrix.
  explicit GroupModel(const SpaceModel& space);

  const SpaceModel& space() const { return *space_; }
  std::size_t order() const { return elements_.size(); }
  const Projectivity& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Projectivity>& elements() const { return elements_; }
  std::size_t identity_index() const { return identity_; }

  // Index of the element with this matrix, up to scalars.
  std::optional<std::size_t> find(const Mat4& m) const;
  // Index of "g then h", i.e. the matrix M_g M_h; absent if outside the set.
  std::optional<std::size_t> compose(std::size_t g, std::size_t h) const;
  std::optional<std::size_t> inverse(std::size_t g) const;

  Vec4 act_point(std::size_t g, const Vec4& x) const;
  Vec4 act_plane(std::size_t g, const Vec4& c) const;
  PointId act_point(std::size_t g, PointId p) const;
  PlaneId act_plane(std::size_t g, PlaneId pi) const;
  LineId act_line(std::size_t g, LineId l) const;

 private:
  std::uint64_t key(const Mat4& normalized) const;

  const SpaceModel* space_;
  std::vector<Projectivity> elements_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::size_t identity_ = 0;
};

// A partition of a sorted id list into orbits. Orbits are numbered by their
// least member, ascending.
struct Orbits {
  std::vector<std::vector<std::uint32_t>> members;  // each sorted
  std::vector<std::int32_t> orbit_of;               // indexed by universe id, -1 outside items
};

using ImageFn = std::function<std::uint32_t(std::size_t g, std::uint32_t id)>;

// Throws Error{ActionEscape} if an image falls outside items.
Orbits orbits(std::size_t universe, std::span<const std::uint32_t> items, std::size_t group_order,
              const ImageFn& image, kernels::Exec exec = kernels::Exec::Parallel);

Orbits plane_orbits(const GroupModel& g, std::span<const std::uint32_t> items,
                    kernels::Exec exec = kernels::Exec::Parallel);
Orbits line_orbits(const GroupModel& g, std::span<const std::uint32_t> items,
                   kernels::Exec exec = kernels::Exec::Parallel);

}  // namespace cubica::group
