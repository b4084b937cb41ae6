#include "cubica/pg3.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cubica/error.hpp"

namespace cubica::pg3 {
namespace {

std::array<Vec4, 2> reduce_rows(const Field& f, Vec4 r0, Vec4 r1, std::array<int, 2>& pivots,
                                int& rank) {
  std::array<Vec4, 2> m{r0, r1};
  rank = 0;
  for (int col = 0; col < 4 && rank < 2; ++col) {
    int sel = -1;
    for (int r = rank; r < 2; ++r) {
      if (m[r][col] != f.zero()) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[rank], m[sel]);
    const Elem s = f.inv(m[rank][col]);
    for (auto& x : m[rank]) x = f.mul(x, s);
    for (int r = 0; r < 2; ++r) {
      if (r == rank || m[r][col] == f.zero()) continue;
      const Elem factor = m[r][col];
      for (int c = 0; c < 4; ++c) m[r][c] = f.sub(m[r][c], f.mul(factor, m[rank][c]));
    }
    pivots[rank] = col;
    ++rank;
  }
  return m;
}

}  // namespace

long theta(int n, long q) {
  long s = 0, t = 1;
  for (int i = 0; i <= n; ++i) {
    s += t;
    t *= q;
  }
  return s;
}

long beta3(long q) { return (q * q + 1) * (q * q + q + 1); }

std::array<Vec4, 2> null_space(const Field& f, const Vec4& a, const Vec4& b) {
  std::array<int, 2> piv{};
  int rank = 0;
  const auto m = reduce_rows(f, a, b, piv, rank);
  if (rank < 2) throw std::domain_error("null_space: rows are dependent");
  std::array<int, 2> free_cols{};
  int nf = 0;
  for (int c = 0; c < 4; ++c)
    if (c != piv[0] && c != piv[1]) free_cols[nf++] = c;
  std::array<Vec4, 2> out{};
  for (int k = 0; k < 2; ++k) {
    Vec4 x{};
    x[free_cols[k]] = f.one();
    for (int r = 0; r < 2; ++r) x[piv[r]] = f.neg(m[r][free_cols[k]]);
    out[k] = x;
  }
  return out;
}

SpaceModel::SpaceModel(Field field) : field_(std::move(field)) {
  const int q = field_.q();
  const Field& f = field_;

  // Normalized vectors in lexicographic order: (0,0,0,1) < (0,0,1,*) < ...
  for (int lead = 3; lead >= 0; --lead) {
    const int free = 3 - lead;
    int count = 1;
    for (int i = 0; i < free; ++i) count *= q;
    for (int n = 0; n < count; ++n) {
      Vec4 v{};
      v[lead] = f.one();
      int rest = n;
      for (int pos = 3; pos > lead; --pos) {
        v[pos] = f.element(rest % q);
        rest /= q;
      }
      vectors_.push_back(v);
    }
  }
  index_of_code_.assign(static_cast<std::size_t>(q) * q * q * q, -1);
  for (std::uint32_t i = 0; i < vectors_.size(); ++i) index_of_code_[vector_index(vectors_[i])] = i;

  // One line per 2x4 reduced row echelon matrix.
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      std::vector<int> free0, free1;
      for (int k = i + 1; k < 4; ++k)
        if (k != j) free0.push_back(k);
      for (int k = j + 1; k < 4; ++k) free1.push_back(k);
      const int nfree = static_cast<int>(free0.size() + free1.size());
      int count = 1;
      for (int t = 0; t < nfree; ++t) count *= q;
      for (int n = 0; n < count; ++n) {
        Vec4 r0{}, r1{};
        r0[i] = f.one();
        r1[j] = f.one();
        int rest = n;
        for (int k : free0) {
          r0[k] = f.element(rest % q);
          rest /= q;
        }
        for (int k : free1) {
          r1[k] = f.element(rest % q);
          rest /= q;
        }
        Pluecker key = pluecker(r0, r1);
        std::size_t lead = 0;
        while (key[lead] == f.zero()) ++lead;
        const Elem s = f.inv(key[lead]);
        for (auto& x : key) x = f.mul(x, s);
        lines_.push_back(ProjLine{key, point_id(r0), point_id(r1)});
      }
    }
  }
  std::sort(lines_.begin(), lines_.end(), [this](const ProjLine& x, const ProjLine& y) {
    return pack(x.key) < pack(y.key);
  });
  line_keys_.reserve(lines_.size());
  for (const auto& l : lines_) line_keys_.push_back(pack(l.key));
}

std::uint32_t SpaceModel::vector_index(const Vec4& v) const {
  const std::uint32_t q = static_cast<std::uint32_t>(field_.q());
  return ((v[0].code * q + v[1].code) * q + v[2].code) * q + v[3].code;
}

std::uint32_t SpaceModel::pack(const Pluecker& key) const {
  const std::uint32_t q = static_cast<std::uint32_t>(field_.q());
  std::uint32_t code = 0;
  for (Elem x : key) code = code * q + x.code;
  return code;
}

Vec4 SpaceModel::normalize(const Vec4& v) const {
  for (const Elem x : v) {
    if (x != field_.zero()) {
      const Elem s = field_.inv(x);
      return Vec4{field_.mul(v[0], s), field_.mul(v[1], s), field_.mul(v[2], s), field_.mul(v[3], s)};
    }
  }
  throw std::domain_error("zero vector has no projective point");
}

PointId SpaceModel::point_id(const Vec4& v) const {
  return PointId{static_cast<std::uint32_t>(index_of_code_[vector_index(normalize(v))])};
}

PlaneId SpaceModel::plane_id(const Vec4& v) const {
  return PlaneId{static_cast<std::uint32_t>(index_of_code_[vector_index(normalize(v))])};
}

LineId SpaceModel::line_id(const Pluecker& key) const {
  std::size_t lead = 0;
  while (lead < 6 && key[lead] == field_.zero()) ++lead;
  if (lead == 6) throw std::domain_error("zero Pluecker vector");
  Pluecker k = key;
  const Elem s = field_.inv(key[lead]);
  for (auto& x : k) x = field_.mul(x, s);
  const std::uint32_t code = pack(k);
  const auto it = std::lower_bound(line_keys_.begin(), line_keys_.end(), code);
  if (it == line_keys_.end() || *it != code) {
    throw std::domain_error("Pluecker vector does not satisfy the Pluecker relation");
  }
  return LineId{static_cast<std::uint32_t>(it - line_keys_.begin())};
}

Elem SpaceModel::dot(const Vec4& x, const Vec4& c) const {
  const Field& f = field_;
  return f.add(f.add(f.mul(x[0], c[0]), f.mul(x[1], c[1])), f.add(f.mul(x[2], c[2]), f.mul(x[3], c[3])));
}

Pluecker SpaceModel::pluecker(const Vec4& u, const Vec4& v) const {
  const Field& f = field_;
  auto minor = [&](int i, int j) { return f.sub(f.mul(u[i], v[j]), f.mul(u[j], v[i])); };
  return Pluecker{minor(0, 1), minor(0, 2), minor(0, 3), minor(1, 2), minor(1, 3), minor(2, 3)};
}

Elem SpaceModel::pluecker_pairing(const Pluecker& a, const Pluecker& b) const {
  const Field& f = field_;
  // p01 p'23 - p02 p'13 + p03 p'12 + p12 p'03 - p13 p'02 + p23 p'01
  Elem s = f.mul(a[0], b[5]);
  s = f.sub(s, f.mul(a[1], b[4]));
  s = f.add(s, f.mul(a[2], b[3]));
  s = f.add(s, f.mul(a[3], b[2]));
  s = f.sub(s, f.mul(a[4], b[1]));
  s = f.add(s, f.mul(a[5], b[0]));
  return s;
}

bool SpaceModel::satisfies_pluecker_relation(const Pluecker& p) const {
  const Field& f = field_;
  const Elem r = f.add(f.sub(f.mul(p[0], p[5]), f.mul(p[1], p[4])), f.mul(p[2], p[3]));
  return r == f.zero();
}

bool SpaceModel::incident(PointId p, PlaneId pi) const {
  return dot(point(p), plane(pi)) == field_.zero();
}

LineId SpaceModel::line_through(PointId p, PointId r) const {
  if (p == r) throw Error(Errc::CoincidentPoints, "line_through needs two distinct points");
  return line_through(point(p), point(r));
}

LineId SpaceModel::line_through(const Vec4& u, const Vec4& v) const {
  const Pluecker key = pluecker(u, v);
  if (std::all_of(key.begin(), key.end(), [&](Elem x) { return x == field_.zero(); })) {
    throw Error(Errc::CoincidentPoints, "line_through needs two distinct points");
  }
  return line_id(key);
}

LineId SpaceModel::plane_meet(PlaneId a, PlaneId b) const {
  if (a == b) throw Error(Errc::CoincidentPlanes, "plane_meet needs two distinct planes");
  return plane_meet(plane(a), plane(b));
}

LineId SpaceModel::plane_meet(const Vec4& a, const Vec4& b) const {
  std::array<Vec4, 2> basis;
  try {
    basis = null_space(field_, a, b);
  } catch (const std::domain_error&) {
    throw Error(Errc::CoincidentPlanes, "plane_meet needs two distinct planes");
  }
  return line_through(basis[0], basis[1]);
}

bool SpaceModel::line_in_plane(LineId l, PlaneId pi) const {
  const ProjLine& line = lines_[l.value];
  return incident(line.a, pi) && incident(line.b, pi);
}

bool SpaceModel::lines_meet(LineId a, LineId b) const {
  return pluecker_pairing(lines_[a.value].key, lines_[b.value].key) == field_.zero();
}

template <class F>
void SpaceModel::span_points(const Vec4& u, const Vec4& v, F&& emit) const {
  const Field& f = field_;
  emit(v);
  for (int c = 0; c < f.q(); ++c) {
    const Elem a = f.element(c);
    emit(Vec4{f.add(u[0], f.mul(a, v[0])), f.add(u[1], f.mul(a, v[1])), f.add(u[2], f.mul(a, v[2])),
              f.add(u[3], f.mul(a, v[3]))});
  }
}

void SpaceModel::points_on(LineId l, std::span<PointId> out) const {
  const ProjLine& line = lines_[l.value];
  std::size_t k = 0;
  span_points(point(line.a), point(line.b), [&](const Vec4& v) { out[k++] = point_id(v); });
}

void SpaceModel::planes_through(LineId l, std::span<PlaneId> out) const {
  const ProjLine& line = lines_[l.value];
  const auto basis = null_space(field_, point(line.a), point(line.b));
  std::size_t k = 0;
  span_points(basis[0], basis[1], [&](const Vec4& v) { out[k++] = plane_id(v); });
}

std::vector<PointId> SpaceModel::points_on(LineId l) const {
  std::vector<PointId> out(q() + 1);
  points_on(l, out);
  return out;
}

std::vector<PlaneId> SpaceModel::planes_through(LineId l) const {
  std::vector<PlaneId> out(q() + 1);
  planes_through(l, out);
  return out;
}

}  // namespace cubica::pg3
