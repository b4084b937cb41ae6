#include "cubica/classify.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

#include "cubica/error.hpp"

namespace cubica::classify {
namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

template <class T, std::size_t N>
std::optional<T> lookup(std::string_view s, const std::array<std::pair<std::string_view, T>, N>& table) {
  const std::string key = lower(s);
  for (const auto& [k, v] : table)
    if (key == k) return v;
  return std::nullopt;
}

std::vector<std::uint32_t> raw_ids(const std::vector<LineId>& v) {
  std::vector<std::uint32_t> out;
  out.reserve(v.size());
  for (auto l : v) out.push_back(l.value);
  return out;
}

}  // namespace

std::string_view name(PlaneType t) {
  switch (t) {
    case PlaneType::Gamma: return "Gamma";
    case PlaneType::TwoC: return "2C";
    case PlaneType::ThreeC: return "3C";
    case PlaneType::OneCbar: return "1Cbar";
    case PlaneType::ZeroC: return "0C";
  }
  return "?";
}

std::string_view name(LineType t) {
  switch (t) {
    case LineType::RC: return "RC";
    case LineType::RA: return "RA";
    case LineType::T: return "T";
    case LineType::IC: return "IC";
    case LineType::IA: return "IA";
    case LineType::UGamma: return "UG";
    case LineType::UnGamma: return "UnG";
    case LineType::EGamma: return "EG";
    case LineType::EnGamma: return "EnG";
    case LineType::Axis: return "A";
    case LineType::EA: return "EA";
  }
  return "?";
}

std::optional<PlaneType> parse_plane_type(std::string_view s) {
  static constexpr std::array<std::pair<std::string_view, PlaneType>, 12> table{{
      {"gamma", PlaneType::Gamma},     {"\xce\x93", PlaneType::Gamma},  {"2c", PlaneType::TwoC},
      {"twoc", PlaneType::TwoC},       {"3c", PlaneType::ThreeC},       {"threec", PlaneType::ThreeC},
      {"1cbar", PlaneType::OneCbar},   {"1c", PlaneType::OneCbar},      {"onecbar", PlaneType::OneCbar},
      {"1\xcc\x84" "c", PlaneType::OneCbar}, {"0c", PlaneType::ZeroC},  {"zeroc", PlaneType::ZeroC},
  }};
  return lookup(s, table);
}

std::optional<LineType> parse_line_type(std::string_view s) {
  static constexpr std::array<std::pair<std::string_view, LineType>, 19> table{{
      {"rc", LineType::RC},          {"ra", LineType::RA},          {"t", LineType::T},
      {"ic", LineType::IC},          {"ia", LineType::IA},          {"ug", LineType::UGamma},
      {"ugamma", LineType::UGamma},  {"u\xce\x93", LineType::UGamma}, {"ung", LineType::UnGamma},
      {"ungamma", LineType::UnGamma}, {"un\xce\x93", LineType::UnGamma}, {"eg", LineType::EGamma},
      {"egamma", LineType::EGamma},  {"e\xce\x93", LineType::EGamma}, {"eng", LineType::EnGamma},
      {"engamma", LineType::EnGamma}, {"a", LineType::Axis},        {"axis", LineType::Axis},
      {"ea", LineType::EA},
  }};
  if (auto t = lookup(s, table)) return t;
  if (lower(s) == "en\xce\x93") return LineType::EnGamma;
  return std::nullopt;
}

bool valid_for(LineType t, int xi) {
  switch (t) {
    case LineType::RA:
    case LineType::IA:
    case LineType::EGamma: return xi != 0;
    case LineType::Axis:
    case LineType::EA: return xi == 0;
    default: return true;
  }
}

std::vector<LineType> line_types_for(int xi) {
  std::vector<LineType> out;
  for (auto t : kLineTypes)
    if (valid_for(t, xi)) out.push_back(t);
  return out;
}

bool is_external(LineType t) {
  switch (t) {
    case LineType::RC:
    case LineType::T:
    case LineType::UGamma:
    case LineType::UnGamma: return false;
    default: return true;
  }
}

PlaneType classify_plane(PlaneId pi, const CubicModel& cubic) {
  if (cubic.param_of_plane(pi) >= 0) return PlaneType::Gamma;
  const auto& space = cubic.space();
  int n = 0;
  for (auto p : cubic.points())
    if (space.incident(p, pi)) ++n;
  switch (n) {
    case 0: return PlaneType::ZeroC;
    case 1: return PlaneType::OneCbar;
    case 2: return PlaneType::TwoC;
    case 3: return PlaneType::ThreeC;
    default: throw std::logic_error("plane meets the cubic in more than three points");
  }
}

LineType classify_line(LineId l, const CubicModel& cubic, std::span<const PlaneType> plane_labels,
                       std::span<const PlaneId> pencil) {
  const auto& space = cubic.space();
  std::array<pg3::PointId, 17> buf{};
  const std::span<pg3::PointId> pts(buf.data(), static_cast<std::size_t>(space.q()) + 1);
  space.points_on(l, pts);
  int n = 0, contact = -1;
  for (auto p : pts)
    if (cubic.on_cubic(p)) {
      ++n;
      contact = cubic.param_of(p);
    }
  const auto in_gamma_plane = [&] {
    return std::any_of(pencil.begin(), pencil.end(),
                       [&](PlaneId pi) { return plane_labels[pi.value] == PlaneType::Gamma; });
  };
  if (n > 2) throw std::logic_error("line meets the cubic in more than two points");
  if (n == 2) return LineType::RC;
  if (n == 1) {
    if (cubic.tangent_line(contact) == l) return LineType::T;
    return in_gamma_plane() ? LineType::UGamma : LineType::UnGamma;
  }
  if (cubic.chord_through_point(pts[0]) == l) return LineType::IC;
  if (cubic.has_polarity()) {
    switch (cubic.chord_kind(cubic.polarity().line_to_line(l))) {
      case cubic::ChordKind::Real: return LineType::RA;
      case cubic::ChordKind::Imaginary: return LineType::IA;
      default: break;
    }
    return in_gamma_plane() ? LineType::EGamma : LineType::EnGamma;
  }
  const LineId axis = *cubic.axis_line();
  if (l == axis) return LineType::Axis;
  return space.lines_meet(l, axis) ? LineType::EA : LineType::EnGamma;
}

LineType classify_line(LineId l, const CubicModel& cubic, std::span<const PlaneType> plane_labels) {
  const auto pencil = cubic.space().planes_through(l);
  return classify_line(l, cubic, plane_labels, pencil);
}

std::vector<Representative> pinned_representatives(const CubicModel& cubic) {
  const auto& space = cubic.space();
  const auto& f = space.field();
  std::vector<Representative> out;
  const gf::Elem o = f.one(), z = f.zero();
  const pg3::Vec4 p0{z, z, z, o};
  const auto rho = f.least_nonsquare();
  if (!f.odd()) {
    out.push_back({LineType::UGamma, 1, space.line_through(p0, {z, o, z, z}), "line(P0, (0,1,0,0))"});
    out.push_back({LineType::UGamma, 2, space.line_through(p0, {z, o, o, z}), "line(P0, (0,1,1,0))"});
    return out;
  }
  out.push_back({LineType::UnGamma, 1, space.line_through(p0, {o, z, o, z}), "line(P0, (1,0,1,0))"});
  out.push_back({LineType::UnGamma, 2, space.line_through(p0, {o, z, *rho, z}), "line(P0, (1,0,rho,0))"});
  if (f.xi() != 0) {
    const pg3::Vec4 osc0{o, z, z, z};
    const gf::Elem m3 = f.neg(f.from_int(3));
    out.push_back({LineType::EGamma, 1, space.plane_meet(osc0, {z, m3, z, f.neg(o)}),
                   "pi(1,0,0,0) meet pi(0,-3,0,-1)"});
    out.push_back({LineType::EGamma, 2, space.plane_meet(osc0, {z, f.mul(m3, *rho), z, f.neg(o)}),
                   "pi(1,0,0,0) meet pi(0,-3rho,0,-1)"});
  } else {
    const pg3::Vec4 pa{z, o, z, z};
    out.push_back({LineType::EA, 1, space.line_through(pa, {z, z, o, o}), "line((0,1,0,0), (0,0,1,1))"});
    out.push_back({LineType::EA, 2, space.line_through(pa, {o, z, o, z}), "line((0,1,0,0), (1,0,1,0))"});
    out.push_back({LineType::EA, 3, space.line_through(pa, {o, z, *rho, z}), "line((0,1,0,0), (1,0,rho,0))"});
  }
  return out;
}

long pinned_orbit_size(LineType t, int orbit, long q) {
  const long g = q * q * q - q;
  switch (t) {
    case LineType::UGamma: return orbit == 1 ? q + 1 : q * q - 1;
    case LineType::UnGamma:
    case LineType::EGamma: return g / 2;
    case LineType::EA: return orbit == 1 ? g : (q * q - 1) / 2;
    default: return 0;
  }
}

Taxonomy::Taxonomy(const CubicModel& cubic, const GroupModel& group, std::span<const PlaneId> pencils,
                   kernels::Exec exec)
    : q_(cubic.q()), xi_(cubic.xi()) {
  const auto& space = cubic.space();
  const std::size_t width = static_cast<std::size_t>(q_) + 1;

  plane_labels_.resize(space.num_planes());
  kernels::for_each_index(space.num_planes(), exec, [&](std::size_t i) {
    plane_labels_[i] = classify_plane(PlaneId{static_cast<std::uint32_t>(i)}, cubic);
  });
  line_labels_.resize(space.num_lines());
  kernels::for_each_index(space.num_lines(), exec, [&](std::size_t i) {
    line_labels_[i] =
        classify_line(LineId{static_cast<std::uint32_t>(i)}, cubic, plane_labels_, pencils.subspan(i * width, width));
  });

  for (std::uint32_t i = 0; i < plane_labels_.size(); ++i)
    planes_[static_cast<int>(plane_labels_[i])].push_back(PlaneId{i});
  for (std::uint32_t i = 0; i < line_labels_.size(); ++i)
    lines_[static_cast<int>(line_labels_[i])].push_back(LineId{i});

  for (auto t : kPlaneTypes) {
    std::vector<std::uint32_t> ids;
    for (auto pi : planes_of(t)) ids.push_back(pi.value);
    plane_orbit_counts_[static_cast<int>(t)] =
        static_cast<int>(group::plane_orbits(group, ids, exec).members.size());
  }

  representatives_ = pinned_representatives(cubic);
  line_orbit_.assign(space.num_lines(), 0);
  for (auto t : kLineTypes) {
    const auto& lines = lines_of(t);
    if (lines.empty()) continue;
    const auto orbs = group::line_orbits(group, raw_ids(lines), exec);
    std::vector<int> order;
    for (const auto& rep : representatives_) {
      if (rep.type != t) continue;
      if (line_type(rep.line) != t) {
        throw Error(Errc::RepresentativeMismatch, "representative " + rep.text + " of " + std::string(name(t)) +
                                                      " is classified as " + std::string(name(line_type(rep.line))));
      }
      const int o = orbs.orbit_of[rep.line.value];
      const long want = pinned_orbit_size(t, rep.orbit, q_);
      if (static_cast<long>(orbs.members[o].size()) != want ||
          std::find(order.begin(), order.end(), o) != order.end()) {
        throw Error(Errc::RepresentativeMismatch, "orbit of " + rep.text + " has size " +
                                                      std::to_string(orbs.members[o].size()) + ", expected " +
                                                      std::to_string(want));
      }
      order.push_back(o);
    }
    for (int o = 0; o < static_cast<int>(orbs.members.size()); ++o)
      if (std::find(order.begin(), order.end(), o) == order.end()) order.push_back(o);
    auto& dest = orbit_lines_[static_cast<int>(t)];
    for (std::size_t j = 0; j < order.size(); ++j) {
      std::vector<LineId> members;
      for (auto id : orbs.members[order[j]]) {
        members.push_back(LineId{id});
        line_orbit_[id] = static_cast<std::int32_t>(j + 1);
      }
      dest.push_back(std::move(members));
    }
  }
}

std::vector<std::size_t> Taxonomy::orbit_sizes(LineType t) const {
  std::vector<std::size_t> out;
  for (const auto& o : orbit_lines_[static_cast<int>(t)]) out.push_back(o.size());
  return out;
}

}  // namespace cubica::classify
