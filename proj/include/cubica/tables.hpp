#pragma once

// Closed forms: class sizes, orbit counts, and the Π/Λ tables per class and
// per orbit. ξ is always the natural q mod 3.

#include <optional>

#include "cubica/classify.hpp"
#include "cubica/incidence.hpp"

namespace cubica::tables {

using classify::LineType;
using classify::PlaneType;
using incidence::Rational;

struct Cell {
  Rational pi;
  long long lambda = 0;
};

// q mod 3 as -1, 0, +1.
int xi_of(long q);

long long plane_class_size(PlaneType t, long q);
// Zero when the class is not defined at this q.
long long line_class_size(LineType t, long q);

struct OrbitCount {
  int value = 0;
  bool at_least = false;  // "value or more"
};
OrbitCount orbit_count(LineType t, long q);

// Absent when λ is not defined at this q.
std::optional<Cell> table1(LineType lambda, PlaneType pi, long q);

// Whether the per-orbit table covers class λ at this q.
bool table2_applies(LineType lambda, long q);
int table2_orbits(LineType lambda);
long long table2_orbit_size(LineType lambda, int orbit, long q);
// Absent unless table2_applies.
std::optional<Cell> table2(LineType lambda, int orbit, PlaneType pi, long q);

}  // namespace cubica::tables
