#pragma once

// Plane types, line classes and the orbit splits of the classes.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cubica/cubic.hpp"
#include "cubica/group.hpp"
#include "cubica/kernels.hpp"

namespace cubica::classify {

using cubic::CubicModel;
using group::GroupModel;
using pg3::LineId;
using pg3::PlaneId;

enum class PlaneType : std::uint8_t { Gamma, TwoC, ThreeC, OneCbar, ZeroC };
enum class LineType : std::uint8_t { RC, RA, T, IC, IA, UGamma, UnGamma, EGamma, EnGamma, Axis, EA };

inline constexpr std::array<PlaneType, 5> kPlaneTypes{PlaneType::Gamma, PlaneType::TwoC, PlaneType::ThreeC,
                                                      PlaneType::OneCbar, PlaneType::ZeroC};
// Row order of the tables.
inline constexpr std::array<LineType, 11> kLineTypes{
    LineType::RC, LineType::T,       LineType::IC,   LineType::UGamma, LineType::UnGamma, LineType::RA,
    LineType::IA, LineType::EGamma, LineType::EnGamma, LineType::Axis, LineType::EA};

std::string_view name(PlaneType t);
std::string_view name(LineType t);
// Accepts the names above and a few spellings ("Γ", "UGamma", "Axis", "1C", ...).
std::optional<PlaneType> parse_plane_type(std::string_view s);
std::optional<LineType> parse_line_type(std::string_view s);

// RA, IA, EΓ need ξ != 0; Axis and EA need ξ = 0.
bool valid_for(LineType t, int xi);
std::vector<LineType> line_types_for(int xi);

// External lines: no point of C on them.
bool is_external(LineType t);

PlaneType classify_plane(PlaneId pi, const CubicModel& cubic);
// pencil: the q+1 planes through l; plane_labels: indexed by plane id.
LineType classify_line(LineId l, const CubicModel& cubic, std::span<const PlaneType> plane_labels,
                       std::span<const PlaneId> pencil);
LineType classify_line(LineId l, const CubicModel& cubic, std::span<const PlaneType> plane_labels);

struct Representative {
  LineType type;
  int orbit;  // 1-based
  LineId line;
  std::string text;
};

// The lines that pin orbit numbers: UΓ for even q, UnΓ for odd q, EΓ for odd
// q with ξ != 0, EA for ξ = 0.
std::vector<Representative> pinned_representatives(const CubicModel& cubic);

// Orbit sizes the pinned representatives must have.
long pinned_orbit_size(LineType t, int orbit, long q);

class Taxonomy {
 public:
  // pencils: the flat table from kernels::line_pencils.
  // Throws Error{RepresentativeMismatch} or Error{ActionEscape}.
  Taxonomy(const CubicModel& cubic, const GroupModel& group, std::span<const PlaneId> pencils,
           kernels::Exec exec = kernels::Exec::Parallel);

  int q() const { return q_; }
  int xi() const { return xi_; }

  PlaneType plane_type(PlaneId pi) const { return plane_labels_[pi.value]; }
  LineType line_type(LineId l) const { return line_labels_[l.value]; }
  int line_orbit(LineId l) const { return line_orbit_[l.value]; }
  std::span<const PlaneType> plane_labels() const { return plane_labels_; }

  const std::vector<PlaneId>& planes_of(PlaneType t) const { return planes_[static_cast<int>(t)]; }
  const std::vector<LineId>& lines_of(LineType t) const { return lines_[static_cast<int>(t)]; }
  // j is 1-based.
  const std::vector<LineId>& lines_of(LineType t, int j) const { return orbit_lines_[static_cast<int>(t)][j - 1]; }
  int orbit_count(LineType t) const { return static_cast<int>(orbit_lines_[static_cast<int>(t)].size()); }
  std::vector<std::size_t> orbit_sizes(LineType t) const;
  // Number of group orbits into which the planes of type t fall.
  int plane_orbit_count(PlaneType t) const { return plane_orbit_counts_[static_cast<int>(t)]; }

  const std::vector<Representative>& representatives() const { return representatives_; }

 private:
  int q_;
  int xi_;
  std::vector<PlaneType> plane_labels_;
  std::vector<LineType> line_labels_;
  std::vector<std::int32_t> line_orbit_;
  std::array<std::vector<PlaneId>, 5> planes_;
  std::array<std::vector<LineId>, 11> lines_;
  std::array<std::vector<std::vector<LineId>>, 11> orbit_lines_;
  std::array<int, 5> plane_orbit_counts_{};
  std::vector<Representative> representatives_;
};

}  // namespace cubica::classify
