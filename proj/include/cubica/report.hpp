#pragma once

// Rendering of verification reports and taxonomy censuses.

#include <ostream>

#include "json.hpp"

#include "cubica/verify.hpp"
#include "cubica/workbench.hpp"

namespace cubica::report {

using Json = nlohmann::ordered_json;

Json to_json(const verify::Report& r);
// One row per cell, then one row per check.
void write_csv(std::ostream& out, const verify::Report& r);

// Plane types, line classes, orbit sizes and representative ids.
Json taxonomy_json(const Workbench& wb);

}  // namespace cubica::report
