#pragma once

// Everything built for one q: field, space, cubic, group, line pencils and
// the taxonomy.

#include <span>
#include <vector>

#include "cubica/classify.hpp"
#include "cubica/cubic.hpp"
#include "cubica/gf.hpp"
#include "cubica/group.hpp"
#include "cubica/incidence.hpp"
#include "cubica/kernels.hpp"
#include "cubica/pg3.hpp"

namespace cubica {

class Workbench {
 public:
  // Throws Error{NotAPrimePower} or Error{BoundExceeded}.
  explicit Workbench(int q, int max_q = gf::kDefaultMaxQ, kernels::Exec exec = kernels::Exec::Parallel);
  Workbench(const Workbench&) = delete;
  Workbench& operator=(const Workbench&) = delete;

  int q() const { return field_.q(); }
  int xi() const { return field_.xi(); }
  kernels::Exec exec() const { return exec_; }

  const gf::Field& field() const { return field_; }
  const pg3::SpaceModel& space() const { return space_; }
  const cubic::CubicModel& cubic() const { return cubic_; }
  const group::GroupModel& group() const { return group_; }
  const classify::Taxonomy& taxonomy() const { return taxonomy_; }

  std::span<const pg3::PlaneId> pencils() const { return pencils_; }
  std::span<const pg3::PlaneId> pencil(pg3::LineId l) const {
    const std::size_t w = static_cast<std::size_t>(q()) + 1;
    return std::span<const pg3::PlaneId>(pencils_).subspan(l.value * w, w);
  }

  incidence::IncidenceSubmatrix submatrix(const incidence::Selector& sel) const {
    return incidence::build_submatrix(taxonomy_, pencils_, sel, exec_);
  }

 private:
  kernels::Exec exec_;
  gf::Field field_;
  pg3::SpaceModel space_;
  cubic::CubicModel cubic_;
  group::GroupModel group_;
  std::vector<pg3::PlaneId> pencils_;
  classify::Taxonomy taxonomy_;
};

}  // namespace cubica
