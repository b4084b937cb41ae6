#include "cubica/report.hpp"

namespace cubica::report {
namespace {

using classify::kLineTypes;
using classify::kPlaneTypes;
using incidence::to_string;

std::string nm(classify::PlaneType t) { return std::string(classify::name(t)); }
std::string nm(classify::LineType t) { return std::string(classify::name(t)); }

Json field_json(const gf::FieldSpec& f) {
  return Json{{"p", f.p}, {"e", f.e}, {"modulus", f.modulus}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

Json to_json(const verify::Report& r) {
  Json j;
  j["q"] = r.q;
  j["xi"] = r.xi;
  j["field"] = field_json(r.field);
  Json cells = Json::array();
  for (const auto& c : r.cells) {
    cells.push_back(Json{{"table", c.table},
                         {"pi", nm(c.pi)},
                         {"lambda", nm(c.lambda)},
                         {"orbit", c.orbit},
                         {"computedOrbit", c.computed_orbit},
                         {"expectedPi", to_string(c.expected_pi)},
                         {"actualPi", to_string(c.actual_pi)},
                         {"expectedLambda", c.expected_lambda},
                         {"actualLambda", c.actual_lambda},
                         {"pass", c.pass}});
  }
  j["cells"] = std::move(cells);

  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"section", c.section}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  Json swaps = Json::array();
  for (const auto& s : r.swaps) swaps.push_back(Json{{"lambda", nm(s.lambda)}, {"mapping", s.mapping}});
  Json profiles = Json::array();
  for (const auto& p : r.profiles) {
    Json pi, lambda;
    for (auto t : kPlaneTypes) {
      pi[nm(t)] = to_string(p.pi[static_cast<int>(t)]);
      lambda[nm(t)] = p.lambda_counts[static_cast<int>(t)];
    }
    profiles.push_back(Json{{"lambda", nm(p.lambda)}, {"orbit", p.orbit}, {"size", p.size}, {"pi", pi}, {"lambdaCounts", lambda}});
  }
  j["structure"] = Json{{"checks", std::move(checks)}, {"labelSwaps", std::move(swaps)}, {"orbitProfiles", std::move(profiles)}};
  j["summary"] = Json{{"cells", r.cells.size()},
                      {"cellsFailed", r.failed_cells()},
                      {"checks", r.checks.size()},
                      {"checksFailed", r.failed_checks()},
                      {"labelSwaps", r.swaps.size()},
                      {"stoppedEarly", r.stopped_early},
                      {"pass", r.pass()}};
  return j;
}

void write_csv(std::ostream& out, const verify::Report& r) {
  out << "kind,table,pi,lambda,orbit,computedOrbit,expectedPi,actualPi,expectedLambda,actualLambda,pass,detail\n";
  for (const auto& c : r.cells) {
    out << "cell," << c.table << ',' << nm(c.pi) << ',' << nm(c.lambda) << ',' << c.orbit << ',' << c.computed_orbit
        << ',' << to_string(c.expected_pi) << ',' << to_string(c.actual_pi) << ',' << c.expected_lambda << ','
        << c.actual_lambda << ',' << (c.pass ? "true" : "false") << ",\n";
  }
  for (const auto& c : r.checks) {
    out << "check," << c.section << ',' << csv_field(c.name) << ",,,,,,,," << (c.pass ? "true" : "false") << ','
        << csv_field(c.detail) << '\n';
  }
}

Json taxonomy_json(const Workbench& wb) {
  const auto& tax = wb.taxonomy();
  Json j;
  j["q"] = wb.q();
  j["xi"] = wb.xi();
  j["field"] = field_json(wb.field().spec());
  j["groupOrder"] = wb.group().order();
  j["points"] = wb.space().num_points();
  j["lines"] = wb.space().num_lines();
  Json planes = Json::array();
  for (auto t : kPlaneTypes) {
    const auto& ids = tax.planes_of(t);
    planes.push_back(Json{{"type", nm(t)},
                          {"size", ids.size()},
                          {"orbits", tax.plane_orbit_count(t)},
                          {"representative", ids.empty() ? Json() : Json(ids.front().value)}});
  }
  j["planeTypes"] = std::move(planes);
  Json classes = Json::array();
  for (auto t : classify::line_types_for(wb.xi())) {
    Json orbits = Json::array();
    for (int k = 1; k <= tax.orbit_count(t); ++k) {
      const auto& ids = tax.lines_of(t, k);
      orbits.push_back(Json{{"orbit", k}, {"size", ids.size()}, {"representative", ids.front().value}});
    }
    classes.push_back(Json{{"class", nm(t)}, {"size", tax.lines_of(t).size()}, {"orbits", std::move(orbits)}});
  }
  j["lineClasses"] = std::move(classes);
  Json pinned = Json::array();
  for (const auto& rep : tax.representatives())
    pinned.push_back(Json{{"class", nm(rep.type)}, {"orbit", rep.orbit}, {"line", rep.line.value}, {"text", rep.text}});
  j["pinnedRepresentatives"] = std::move(pinned);
  return j;
}

}  // namespace cubica::report
