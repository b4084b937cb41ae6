#include <numeric>
#include <set>

#include "cubica/cubic.hpp"
#include "cubica/group.hpp"
#include "doctest.h"

using namespace cubica;
using namespace cubica::group;

TEST_CASE("group order and identity") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const pg3::SpaceModel s(gf::Field::make(q));
    const GroupModel g(s);
    CHECK(g.order() == static_cast<std::size_t>(q * q * q - q));
    const auto& f = s.field();
    CHECK(normalize(f, matrix_from_params(f, {f.one(), f.zero(), f.zero(), f.one()})) == identity(f));
    CHECK(g.element(g.identity_index()).matrix == identity(f));
  }
}

TEST_CASE("group acts on the cubic and preserves incidence") {
  const pg3::SpaceModel s(gf::Field::make(5));
  const cubic::CubicModel c(s);
  const GroupModel g(s);
  const auto e = g.identity_index();
  for (std::uint32_t i = 0; i < s.num_lines(); ++i) CHECK(g.act_line(e, pg3::LineId{i}) == pg3::LineId{i});
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::set<pg3::PointId> img;
    for (auto p : c.points()) {
      const auto gp = g.act_point(x, p);
      CHECK(c.on_cubic(gp));
      img.insert(gp);
    }
    CHECK(img.size() == 6);
    const auto inv = g.inverse(x);
    REQUIRE(inv);
    CHECK(g.compose(x, *inv) == e);
  }
  for (std::size_t x = 0; x < g.order(); x += 7)
    for (std::uint32_t pi = 0; pi < s.num_planes(); pi += 11)
      for (std::uint32_t p = 0; p < s.num_points(); ++p)
        CHECK(s.incident(pg3::PointId{p}, pg3::PlaneId{pi}) ==
              s.incident(g.act_point(x, pg3::PointId{p}), g.act_plane(x, pg3::PlaneId{pi})));
}

TEST_CASE("composition matches sequential action") {
  const pg3::SpaceModel s(gf::Field::make(7));
  const GroupModel g(s);
  for (std::size_t a = 0; a < g.order(); a += 17)
    for (std::size_t b = 3; b < g.order(); b += 29) {
      const auto ab = g.compose(a, b);
      REQUIRE(ab);
      for (std::uint32_t p = 0; p < s.num_points(); p += 5)
        CHECK(g.act_point(*ab, pg3::PointId{p}) == g.act_point(b, g.act_point(a, pg3::PointId{p})));
    }
}

TEST_CASE("plane orbits") {
  const pg3::SpaceModel s(gf::Field::make(5));
  const GroupModel g(s);
  std::vector<std::uint32_t> all(s.num_planes());
  std::iota(all.begin(), all.end(), 0u);
  const auto serial = plane_orbits(g, all, kernels::Exec::Serial);
  const auto parallel = plane_orbits(g, all, kernels::Exec::Parallel);
  CHECK(serial.members == parallel.members);
  CHECK(serial.orbit_of == parallel.orbit_of);
  std::multiset<std::size_t> sizes;
  for (const auto& o : serial.members) {
    sizes.insert(o.size());
    CHECK(g.order() % o.size() == 0);
  }
  CHECK(sizes == std::multiset<std::size_t>{6, 20, 30, 40, 60});
}

TEST_CASE("axis is a singleton orbit for q = 9") {
  const pg3::SpaceModel s(gf::Field::make(9));
  const cubic::CubicModel c(s);
  const GroupModel g(s);
  for (std::size_t x = 0; x < g.order(); ++x) CHECK(g.act_line(x, *c.axis_line()) == *c.axis_line());
}

TEST_CASE("orbits reject images outside the item set") {
  const pg3::SpaceModel s(gf::Field::make(3));
  const GroupModel g(s);
  const std::vector<std::uint32_t> one{0};
  CHECK_THROWS(line_orbits(g, one));
}
