#include "cubica/group.hpp"

#include <algorithm>
#include <string>

#include "cubica/error.hpp"

namespace cubica::group {

Mat4 matrix_from_params(const Field& f, Params p) {
  const auto m = [&](Elem x, Elem y) { return f.mul(x, y); };
  const auto k = [&](long n, Elem x) { return f.mul(f.from_int(n), x); };
  const Elem a = p.a, b = p.b, c = p.c, d = p.d;
  const Elem a2 = m(a, a), b2 = m(b, b), c2 = m(c, c), d2 = m(d, d);
  Mat4 out{};
  out[0] = {m(a2, a), m(a2, c), m(a, c2), m(c2, c)};
  out[1] = {k(3, m(a2, b)), f.add(m(a2, d), k(2, m(m(a, b), c))), f.add(m(b, c2), k(2, m(m(a, c), d))),
            k(3, m(c2, d))};
  out[2] = {k(3, m(a, b2)), f.add(m(b2, c), k(2, m(m(a, b), d))), f.add(m(a, d2), k(2, m(m(b, c), d))),
            k(3, m(c, d2))};
  out[3] = {m(b2, b), m(b2, d), m(b, d2), m(d2, d)};
  return out;
}

Mat4 multiply(const Field& f, const Mat4& x, const Mat4& y) {
  Mat4 out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Elem s = f.zero();
      for (int k = 0; k < 4; ++k) s = f.add(s, f.mul(x[i][k], y[k][j]));
      out[i][j] = s;
    }
  return out;
}

Mat4 normalize(const Field& f, const Mat4& m) {
  for (const auto& row : m)
    for (Elem x : row)
      if (x != f.zero()) {
        const Elem s = f.inv(x);
        Mat4 out{};
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j) out[i][j] = f.mul(m[i][j], s);
        return out;
      }
  return m;
}

Mat4 identity(const Field& f) {
  Mat4 out{};
  for (int i = 0; i < 4; ++i) out[i][i] = f.one();
  return out;
}

std::optional<Mat4> invert(const Field& f, const Mat4& m) {
  Mat4 a = m;
  Mat4 inv = identity(f);
  for (int col = 0; col < 4; ++col) {
    int piv = -1;
    for (int r = col; r < 4; ++r)
      if (a[r][col] != f.zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(a[col], a[piv]);
    std::swap(inv[col], inv[piv]);
    const Elem s = f.inv(a[col][col]);
    for (int j = 0; j < 4; ++j) {
      a[col][j] = f.mul(a[col][j], s);
      inv[col][j] = f.mul(inv[col][j], s);
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col || a[r][col] == f.zero()) continue;
      const Elem factor = a[r][col];
      for (int j = 0; j < 4; ++j) {
        a[r][j] = f.sub(a[r][j], f.mul(factor, a[col][j]));
        inv[r][j] = f.sub(inv[r][j], f.mul(factor, inv[col][j]));
      }
    }
  }
  return inv;
}

GroupModel::GroupModel(const SpaceModel& space) : space_(&space) {
  const Field& f = space.field();
  const int q = f.q();
  std::unordered_map<std::uint64_t, Projectivity> found;
  for (int ca = 0; ca < q; ++ca)
    for (int cb = 0; cb < q; ++cb)
      for (int cc = 0; cc < q; ++cc)
        for (int cd = 0; cd < q; ++cd) {
          const Params p{f.element(ca), f.element(cb), f.element(cc), f.element(cd)};
          // one tuple per projective class: leading entry 1
          const Elem lead = ca ? p.a : cb ? p.b : cc ? p.c : p.d;
          if (lead != f.one()) continue;
          if (f.sub(f.mul(p.a, p.d), f.mul(p.b, p.c)) == f.zero()) continue;
          const Mat4 m = normalize(f, matrix_from_params(f, p));
          const auto inv = invert(f, m);
          if (!inv) continue;
          found.try_emplace(key(m), Projectivity{m, *inv, p});
        }
  std::vector<std::uint64_t> keys;
  for (const auto& [k, v] : found) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  for (auto k : keys) {
    index_.emplace(k, elements_.size());
    elements_.push_back(found.at(k));
  }
  identity_ = index_.at(key(identity(f)));
}

std::uint64_t GroupModel::key(const Mat4& m) const {
  std::uint64_t k = 0;
  for (const auto& row : m)
    for (Elem x : row) k = (k << 4) | x.code;
  return k;
}

std::optional<std::size_t> GroupModel::find(const Mat4& m) const {
  const auto it = index_.find(key(normalize(space_->field(), m)));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> GroupModel::compose(std::size_t g, std::size_t h) const {
  return find(multiply(space_->field(), elements_[g].matrix, elements_[h].matrix));
}

std::optional<std::size_t> GroupModel::inverse(std::size_t g) const { return find(elements_[g].inverse); }

Vec4 GroupModel::act_point(std::size_t g, const Vec4& x) const {
  const Field& f = space_->field();
  const Mat4& m = elements_[g].matrix;
  Vec4 out{};
  for (int j = 0; j < 4; ++j) {
    Elem s = f.zero();
    for (int i = 0; i < 4; ++i) s = f.add(s, f.mul(x[i], m[i][j]));
    out[j] = s;
  }
  return out;
}

Vec4 GroupModel::act_plane(std::size_t g, const Vec4& c) const {
  const Field& f = space_->field();
  const Mat4& m = elements_[g].inverse;
  Vec4 out{};
  for (int i = 0; i < 4; ++i) {
    Elem s = f.zero();
    for (int j = 0; j < 4; ++j) s = f.add(s, f.mul(m[i][j], c[j]));
    out[i] = s;
  }
  return out;
}

PointId GroupModel::act_point(std::size_t g, PointId p) const {
  return space_->point_id(act_point(g, space_->point(p)));
}

PlaneId GroupModel::act_plane(std::size_t g, PlaneId pi) const {
  return space_->plane_id(act_plane(g, space_->plane(pi)));
}

LineId GroupModel::act_line(std::size_t g, LineId l) const {
  const auto& line = space_->line(l);
  return space_->line_through(act_point(g, space_->point(line.a)), act_point(g, space_->point(line.b)));
}

Orbits orbits(std::size_t universe, std::span<const std::uint32_t> items, std::size_t group_order,
              const ImageFn& image, kernels::Exec exec) {
  Orbits out;
  out.orbit_of.assign(universe, -1);
  std::vector<char> member(universe, 0);
  for (auto id : items) member[id] = 1;
  std::vector<std::uint32_t> images(group_order);
  for (auto seed : items) {
    if (out.orbit_of[seed] >= 0) continue;
    kernels::for_each_index(group_order, exec, [&](std::size_t g) { images[g] = image(g, seed); });
    const auto label = static_cast<std::int32_t>(out.members.size());
    std::vector<std::uint32_t> orbit;
    for (auto img : images) {
      if (img >= universe || !member[img]) {
        throw Error(Errc::ActionEscape, "image " + std::to_string(img) + " of " + std::to_string(seed) +
                                            " leaves the item set");
      }
      if (out.orbit_of[img] == label) continue;
      if (out.orbit_of[img] >= 0) throw std::logic_error("orbits overlap");
      out.orbit_of[img] = label;
      orbit.push_back(img);
    }
    std::sort(orbit.begin(), orbit.end());
    out.members.push_back(std::move(orbit));
  }
  return out;
}

Orbits plane_orbits(const GroupModel& g, std::span<const std::uint32_t> items, kernels::Exec exec) {
  return orbits(g.space().num_planes(), items, g.order(),
                [&g](std::size_t e, std::uint32_t id) { return g.act_plane(e, PlaneId{id}).value; }, exec);
}

Orbits line_orbits(const GroupModel& g, std::span<const std::uint32_t> items, kernels::Exec exec) {
  return orbits(g.space().num_lines(), items, g.order(),
                [&g](std::size_t e, std::uint32_t id) { return g.act_line(e, LineId{id}).value; }, exec);
}

}  // namespace cubica::group
