#include "cubica/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "cubica/error.hpp"
#include "cubica/kernels.hpp"

namespace cubica::verify {
namespace {

using classify::kLineTypes;
using classify::kPlaneTypes;
using pg3::LineId;
using pg3::PlaneId;
using pg3::PointId;

std::string nm(PlaneType t) { return std::string(classify::name(t)); }
std::string nm(LineType t) { return std::string(classify::name(t)); }

std::string label(LineType t, int orbit) { return orbit > 0 ? nm(t) + std::to_string(orbit) : nm(t); }

std::string sel_name(PlaneType pi, LineType t, int orbit) { return "[" + nm(pi) + "," + label(t, orbit) + "]"; }

std::string eq_detail(long long expected, long long actual) {
  return "expected " + std::to_string(expected) + ", got " + std::to_string(actual);
}

std::vector<LineId> all_chords(const cubic::CubicModel& c) {
  std::vector<LineId> out = c.real_chords();
  out.insert(out.end(), c.tangents().begin(), c.tangents().end());
  out.insert(out.end(), c.imaginary_chords().begin(), c.imaginary_chords().end());
  return out;
}

}  // namespace

std::size_t Report::failed_cells() const {
  return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const auto& c) { return !c.pass; }));
}

std::size_t Report::failed_checks() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; }));
}

Verifier::Verifier(const Workbench& wb, Options opts) : wb_(wb), opts_(opts) {
  report_.q = wb.q();
  report_.xi = wb.xi();
  report_.field = wb.field().spec();
}

void Verifier::add_check(const std::string& section, const std::string& name, bool pass, std::string detail) {
  report_.checks.push_back(CheckRecord{section, name, pass, std::move(detail)});
  if (!pass && opts_.fail_fast) throw FailFast{};
}

void Verifier::add_cell(CellRecord cell) {
  const bool pass = cell.pass;
  report_.cells.push_back(std::move(cell));
  if (!pass && opts_.fail_fast) throw FailFast{};
}

Report Verifier::run() {
  try {
    census();
    group();
    geometry();
    field();
    table1();
    table2();
    relations();
    structure();
  } catch (const FailFast&) {
    report_.stopped_early = true;
  }
  return report_;
}

// ---------------------------------------------------------------- census

void Verifier::census() {
  const auto& tax = wb_.taxonomy();
  const long q = wb_.q();
  for (auto t : kPlaneTypes) {
    const auto want = tables::plane_class_size(t, q);
    const auto got = static_cast<long long>(tax.planes_of(t).size());
    add_check("census", "planes." + nm(t) + ".size", want == got, eq_detail(want, got));
    add_check("census", "planes." + nm(t) + ".orbits", tax.plane_orbit_count(t) == 1,
              eq_detail(1, tax.plane_orbit_count(t)));
  }
  long long total = 0;
  for (auto t : classify::line_types_for(wb_.xi())) {
    const auto want = tables::line_class_size(t, q);
    const auto got = static_cast<long long>(tax.lines_of(t).size());
    total += got;
    add_check("census", "lines." + nm(t) + ".size", want == got, eq_detail(want, got));
  }
  for (auto t : kLineTypes)
    if (!classify::valid_for(t, wb_.xi()) && !tax.lines_of(t).empty())
      add_check("census", "lines." + nm(t) + ".absent", false, std::to_string(tax.lines_of(t).size()) + " lines");
  add_check("census", "lines.total", total == pg3::beta3(q), eq_detail(pg3::beta3(q), total));

  // Orbit counts are claimed for q >= 5 only.
  if (q >= 5) {
    for (auto t : classify::line_types_for(wb_.xi())) {
      const auto want = tables::orbit_count(t, q);
      const int got = tax.orbit_count(t);
      const bool ok = want.at_least ? got >= want.value : got == want.value;
      add_check("census", "lines." + nm(t) + ".orbitCount", ok,
                std::string(want.at_least ? "expected at least " : "expected ") + std::to_string(want.value) +
                    ", got " + std::to_string(got));
    }
  }
  for (auto t : kLineTypes) {
    if (tables::table2_orbits(t) == 0) continue;
    bool pinned = false;
    for (const auto& rep : tax.representatives()) pinned = pinned || rep.type == t;
    if (!pinned) continue;
    const auto sizes = tax.orbit_sizes(t);
    for (int j = 1; j <= tables::table2_orbits(t); ++j) {
      const auto want = tables::table2_orbit_size(t, j, q);
      const long long got = j <= static_cast<int>(sizes.size()) ? static_cast<long long>(sizes[j - 1]) : 0;
      add_check("census", "lines." + label(t, j) + ".size", want == got, eq_detail(want, got));
    }
  }
}

// ---------------------------------------------------------------- group

void Verifier::group() {
  const auto& g = wb_.group();
  const auto& space = wb_.space();
  const auto& cub = wb_.cubic();
  const long q = wb_.q();
  const std::size_t n = g.order();
  std::mt19937_64 rng(0x5eed0000u + static_cast<unsigned>(q));
  auto pick = [&](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };

  add_check("group", "order", static_cast<long>(n) == q * q * q - q,
            eq_detail(q * q * q - q, static_cast<long long>(n)));

  bool closed = true;
  std::size_t tested = 0;
  if (q <= opts_.exhaustive_max_q) {
    for (std::size_t a = 0; a < n && closed; ++a)
      for (std::size_t b = 0; b < n && closed; ++b, ++tested) closed = g.compose(a, b).has_value();
  } else {
    for (int i = 0; i < 10000 && closed; ++i, ++tested) closed = g.compose(pick(n), pick(n)).has_value();
  }
  add_check("group", "closure", closed, std::to_string(tested) + " products");
  bool inverses = true;
  for (std::size_t a = 0; a < n; ++a) inverses = inverses && g.inverse(a).has_value();
  add_check("group", "inverses", inverses);

  bool stabilizes = true;
  for (std::size_t e = 0; e < n && stabilizes; ++e)
    for (int k = 0; k <= q; ++k) {
      if (!cub.on_cubic(g.act_point(e, cub.point(k))) || cub.param_of_plane(g.act_plane(e, cub.osculating_plane(k))) < 0) {
        stabilizes = false;
        break;
      }
    }
  add_check("group", "stabilizesCubicAndGamma", stabilizes);

  std::set<std::array<std::uint32_t, 3>> triples;
  for (std::size_t e = 0; e < n; ++e)
    triples.insert({g.act_point(e, cub.point(0)).value, g.act_point(e, cub.point(1)).value,
                    g.act_point(e, cub.point(static_cast<int>(q))).value});
  const long long want_triples = (q + 1) * q * (q - 1);
  add_check("group", "tripleTransitive", static_cast<long long>(triples.size()) == want_triples,
            eq_detail(want_triples, static_cast<long long>(triples.size())));

  bool preserves = true;
  for (int s = 0; s < 100 && preserves; ++s) {
    const std::size_t e = pick(n);
    const PlaneId pi{static_cast<std::uint32_t>(pick(space.num_planes()))};
    const PlaneId gpi = g.act_plane(e, pi);
    for (std::uint32_t p = 0; p < space.num_points(); ++p)
      if (space.incident(PointId{p}, pi) != space.incident(g.act_point(e, PointId{p}), gpi)) {
        preserves = false;
        break;
      }
  }
  add_check("group", "incidencePreserved", preserves, "100 sampled elements against all points");

  if (cub.has_polarity()) {
    const auto& pol = cub.polarity();
    bool commutes = true;
    for (int s = 0; s < 100 && commutes; ++s) {
      const std::size_t e = pick(n);
      const PointId p{static_cast<std::uint32_t>(pick(space.num_points()))};
      const LineId l{static_cast<std::uint32_t>(pick(space.num_lines()))};
      commutes = pol.point_to_plane(g.act_point(e, p)) == g.act_plane(e, pol.point_to_plane(p)) &&
                 pol.line_to_line(g.act_line(e, l)) == g.act_line(e, pol.line_to_line(l));
    }
    add_check("group", "polarityCommutes", commutes, "100 sampled (g, P, l)");
  }
}

// ---------------------------------------------------------------- geometry

void Verifier::geometry() {
  const auto& space = wb_.space();
  const auto& cub = wb_.cubic();
  const auto& f = wb_.field();
  const int q = wb_.q();
  const bool exhaustive = q <= opts_.exhaustive_max_q;

  std::set<std::uint32_t> distinct;
  for (auto p : cub.points()) distinct.insert(p.value);
  add_check("geometry", "cubic.points", static_cast<int>(distinct.size()) == q + 1,
            eq_detail(q + 1, static_cast<long long>(distinct.size())));

  bool no_four = true;
  for (int a = 0; a <= q && no_four; ++a)
    for (int b = a + 1; b <= q && no_four; ++b)
      for (int c = b + 1; c <= q && no_four; ++c)
        for (int d = c + 1; d <= q && no_four; ++d) {
          const group::Mat4 m{space.point(cub.point(a)), space.point(cub.point(b)), space.point(cub.point(c)),
                              space.point(cub.point(d))};
          no_four = group::invert(f, m).has_value();
        }
  add_check("geometry", "cubic.noFourCoplanar", no_four);

  bool osc_ok = true, tangent_ok = true;
  for (int k = 0; k <= q; ++k) {
    int on = 0;
    for (int s = 0; s <= q; ++s) on += space.incident(cub.point(s), cub.osculating_plane(k)) ? 1 : 0;
    osc_ok = osc_ok && on == 1 && space.incident(cub.point(k), cub.osculating_plane(k));
    int meets = 0;
    for (auto p : space.points_on(cub.tangent_line(k))) meets += cub.on_cubic(p) ? 1 : 0;
    tangent_ok = tangent_ok && meets == 1 && space.line_in_plane(cub.tangent_line(k), cub.osculating_plane(k)) &&
                 cub.chord_kind(cub.tangent_line(k)) == cubic::ChordKind::Tangent;
  }
  add_check("geometry", "osculatingPlanes", osc_ok, "each contains its point and no other cubic point");
  add_check("geometry", "tangents", tangent_ok, "each lies in its osculating plane and meets C once");

  const long long qq = q;
  add_check("geometry", "realChords.size", static_cast<long long>(cub.real_chords().size()) == (qq * qq + qq) / 2,
            eq_detail((qq * qq + qq) / 2, static_cast<long long>(cub.real_chords().size())));
  add_check("geometry", "imaginaryChords.size",
            static_cast<long long>(cub.imaginary_chords().size()) == (qq * qq - qq) / 2,
            eq_detail((qq * qq - qq) / 2, static_cast<long long>(cub.imaginary_chords().size())));
  bool disjoint_from_c = true;
  for (auto l : cub.imaginary_chords())
    for (auto p : space.points_on(l)) disjoint_from_c = disjoint_from_c && !cub.on_cubic(p);
  add_check("geometry", "imaginaryChords.offCubic", disjoint_from_c);

  // Every point off C lies on exactly one chord.
  const auto chords = all_chords(cub);
  std::vector<int> cover(space.num_points(), 0);
  for (auto l : chords)
    for (auto p : space.points_on(l))
      if (!cub.on_cubic(p)) ++cover[p.value];
  long long bad = 0;
  for (std::uint32_t p = 0; p < space.num_points(); ++p)
    if (!cub.on_cubic(PointId{p}) && cover[p] != 1) ++bad;
  add_check("geometry", "chords.coverOffCubicOnce", bad == 0, std::to_string(bad) + " points off C not covered once");

  if (exhaustive) {
    long long meets_off = 0;
    std::vector<std::vector<PointId>> pts;
    for (auto l : chords) {
      auto v = space.points_on(l);
      std::sort(v.begin(), v.end());
      pts.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < chords.size(); ++i)
      for (std::size_t j = i + 1; j < chords.size(); ++j) {
        if (!space.lines_meet(chords[i], chords[j])) continue;
        std::vector<PointId> common;
        std::set_intersection(pts[i].begin(), pts[i].end(), pts[j].begin(), pts[j].end(),
                              std::back_inserter(common));
        for (auto p : common) meets_off += cub.on_cubic(p) ? 0 : 1;
      }
    add_check("geometry", "chords.noMeetOffCubic", meets_off == 0,
              std::to_string(chords.size()) + " chords pairwise, " + std::to_string(meets_off) + " bad meets");
  }

  if (auto axis = cub.axis_line()) {
    bool in_all = true;
    for (auto pi : cub.osculating_planes()) in_all = in_all && space.line_in_plane(*axis, pi);
    add_check("geometry", "axis.inAllOsculatingPlanes", in_all);
  }

  if (!cub.has_polarity()) return;
  const auto& pol = cub.polarity();
  bool involution = true, self_incident = true;
  for (std::uint32_t p = 0; p < space.num_points(); ++p) {
    const PlaneId pi = pol.point_to_plane(PointId{p});
    involution = involution && pol.plane_to_point(pi) == PointId{p};
    self_incident = self_incident && space.incident(PointId{p}, pi);
  }
  add_check("geometry", "polarity.involution", involution);
  add_check("geometry", "polarity.selfIncident", self_incident);

  bool reversing = true;
  if (exhaustive) {
    for (std::uint32_t a = 0; a < space.num_points() && reversing; ++a)
      for (std::uint32_t b = a + 1; b < space.num_points(); ++b)
        if (space.incident(PointId{a}, pol.point_to_plane(PointId{b})) !=
            space.incident(PointId{b}, pol.point_to_plane(PointId{a}))) {
          reversing = false;
          break;
        }
  } else {
    std::mt19937_64 rng(0xa11ce000u + static_cast<unsigned>(q));
    for (int s = 0; s < 10000 && reversing; ++s) {
      const PointId a{static_cast<std::uint32_t>(rng() % space.num_points())};
      const PointId b{static_cast<std::uint32_t>(rng() % space.num_points())};
      reversing = space.incident(a, pol.point_to_plane(b)) == space.incident(b, pol.point_to_plane(a));
    }
  }
  add_check("geometry", "polarity.incidenceReversing", reversing, exhaustive ? "all pairs" : "10000 sampled pairs");

  bool c_to_gamma = true;
  for (auto p : cub.points()) c_to_gamma = c_to_gamma && cub.param_of_plane(pol.point_to_plane(p)) >= 0;
  add_check("geometry", "polarity.cubicToGamma", c_to_gamma);

  bool line_involution = true;
  for (std::uint32_t l = 0; l < space.num_lines(); ++l)
    line_involution = line_involution && pol.line_to_line(pol.line_to_line(LineId{l})) == LineId{l};
  add_check("geometry", "polarity.lineInvolution", line_involution);

  std::vector<LineId> tangent_images;
  for (auto l : cub.tangents()) tangent_images.push_back(pol.line_to_line(l));
  std::sort(tangent_images.begin(), tangent_images.end());
  auto tangents = cub.tangents();
  std::sort(tangents.begin(), tangents.end());
  add_check("geometry", "polarity.tangentsFixedAsSet", tangent_images == tangents);

  const auto direct = cubic::axes_from_osculating_planes(cub);
  add_check("geometry", "polarity.realChordsToRealAxes", direct.real == cub.real_axes(),
            std::to_string(direct.real.size()) + " meets of osculating planes");
  add_check("geometry", "polarity.imaginaryChordsToImaginaryAxes", direct.imaginary == cub.imaginary_axes(),
            std::to_string(direct.imaginary.size()) + " conjugate pairs");

  auto partner = [](LineType t) {
    switch (t) {
      case LineType::RC: return LineType::RA;
      case LineType::RA: return LineType::RC;
      case LineType::IC: return LineType::IA;
      case LineType::IA: return LineType::IC;
      case LineType::UnGamma: return LineType::EGamma;
      case LineType::EGamma: return LineType::UnGamma;
      default: return t;
    }
  };
  const auto& tax = wb_.taxonomy();
  long long mislabeled = 0;
  for (std::uint32_t l = 0; l < space.num_lines(); ++l)
    if (tax.line_type(pol.line_to_line(LineId{l})) != partner(tax.line_type(LineId{l}))) ++mislabeled;
  add_check("geometry", "polarity.classPartners", mislabeled == 0,
            std::to_string(mislabeled) + " lines whose image is not in the partner class");

  std::vector<LineId> axes = cub.real_axes();
  axes.insert(axes.end(), cub.tangents().begin(), cub.tangents().end());
  axes.insert(axes.end(), cub.imaginary_axes().begin(), cub.imaginary_axes().end());
  std::vector<int> axes_in_plane(space.num_planes(), 0);
  for (auto l : axes)
    for (auto pi : wb_.pencil(l)) ++axes_in_plane[pi.value];
  long long bad_planes = 0;
  for (std::uint32_t pi = 0; pi < space.num_planes(); ++pi)
    if (cub.param_of_plane(PlaneId{pi}) < 0 && axes_in_plane[pi] != 1) ++bad_planes;
  add_check("geometry", "axes.onePerNonGammaPlane", bad_planes == 0,
            std::to_string(bad_planes) + " planes off Γ without exactly one axis");

  if (exhaustive) {
    long long bad_pairs = 0;
    for (std::size_t i = 0; i < axes.size(); ++i)
      for (std::size_t j = i + 1; j < axes.size(); ++j) {
        if (!space.lines_meet(axes[i], axes[j])) continue;
        const bool shared = std::any_of(cub.osculating_planes().begin(), cub.osculating_planes().end(), [&](PlaneId pi) {
          return space.line_in_plane(axes[i], pi) && space.line_in_plane(axes[j], pi);
        });
        bad_pairs += shared ? 0 : 1;
      }
    add_check("geometry", "axes.meetOnlyInGammaPlanes", bad_pairs == 0,
              std::to_string(axes.size()) + " axes pairwise, " + std::to_string(bad_pairs) + " bad pairs");
  }
}

// ---------------------------------------------------------------- field

void Verifier::field() {
  const auto& f = wb_.field();
  if (!f.odd() || f.xi() == 0) return;
  const auto counts = gf::character_value_counts(f);
  const int beta = f.beta(), xi = f.xi(), q = f.q();
  const int want_r = beta + 1;
  const int want_v = (q + 2 * xi - 2 - beta) / 2;
  add_check("field", "characterCounts.roots", counts.roots == want_r, eq_detail(want_r, counts.roots));
  add_check("field", "characterCounts.nonsquares", counts.nonsquares == want_v, eq_detail(want_v, counts.nonsquares));
}

// ---------------------------------------------------------------- submatrices

void Verifier::sweep() {
  if (swept_) return;
  swept_ = true;
  const auto& tax = wb_.taxonomy();
  const auto exec = wb_.exec();
  for (auto t : classify::line_types_for(wb_.xi())) {
    if (tax.lines_of(t).empty()) continue;
    const int orbits = tax.orbit_count(t);
    for (auto pi : kPlaneTypes) {
      for (int j = 0; j <= (orbits > 1 ? orbits : 0); ++j) {
        const auto m = wb_.submatrix({pi, t, j});
        const std::string where = sel_name(pi, t, j);
        IncidenceStats s;
        try {
          s = incidence::stats(m);
        } catch (const Error& e) {
          structure_checks_.push_back({"structure", "uniformColumns" + where, false, e.what()});
          continue;
        }
        stats_[{pi, t, j}] = s;
        if (orbits == 1) stats_[{pi, t, 1}] = s;
        const bool single_orbit = j > 0 || orbits == 1;
        if (single_orbit) {
          structure_checks_.push_back({"structure", "uniformRows" + where, s.rows_uniform, ""});
        }
        if (s.ones == 0) continue;
        if (single_orbit) {
          const auto row_overlap = kernels::max_row_overlap(m.bits, exec);
          const auto col_overlap = kernels::max_row_overlap(m.bits.transposed(), exec);
          structure_checks_.push_back({"structure", "fourCycleFree" + where, row_overlap <= 1 && col_overlap <= 1,
                                       "max common planes of two lines " + std::to_string(row_overlap) +
                                           ", max common lines of two planes " + std::to_string(col_overlap)});
        }
        if (!s.rows_uniform) continue;
        if (s.lambda == 1) {
          const auto k = incidence::identity_blocks(m.bits);
          const bool ok = k && static_cast<long long>(*k) == *s.pi_exact;
          structure_checks_.push_back({"structure", "identityConcatenation" + where, ok,
                                       ok ? std::to_string(*k) + " blocks of order " + std::to_string(s.rows)
                                          : "no decomposition"});
        }
        if (s.pi_exact == 1) {
          const auto k = incidence::identity_blocks(m.bits.transposed());
          const bool ok = k && static_cast<long long>(*k) == s.lambda;
          structure_checks_.push_back({"structure", "identityStack" + where, ok,
                                       ok ? std::to_string(*k) + " blocks of order " + std::to_string(s.cols)
                                          : "no decomposition"});
        }
      }
    }
  }
}

const IncidenceStats& Verifier::stats_of(PlaneType pi, LineType lambda, int orbit) {
  sweep();
  static const IncidenceStats empty{};
  const auto it = stats_.find({pi, lambda, orbit});
  return it == stats_.end() ? empty : it->second;
}

void Verifier::table1() {
  const long q = wb_.q();
  for (auto t : classify::line_types_for(wb_.xi())) {
    for (auto pi : kPlaneTypes) {
      const auto want = tables::table1(t, pi, q);
      const auto& s = stats_of(pi, t, 0);
      CellRecord c{"table1", pi, t, 0, 0, want->pi, s.pi, want->lambda, s.lambda, false};
      c.pass = s.rows > 0 && c.expected_pi == c.actual_pi && c.expected_lambda == c.actual_lambda;
      add_cell(std::move(c));
    }
  }
}

void Verifier::table2() {
  const auto& tax = wb_.taxonomy();
  const long q = wb_.q();
  for (auto t : kLineTypes) {
    if (!tables::table2_applies(t, q)) continue;
    const int k = tables::table2_orbits(t);
    if (tax.orbit_count(t) < k) {
      add_check("table2", "orbits." + nm(t), false, eq_detail(k, tax.orbit_count(t)));
      continue;
    }
    auto cells_for = [&](const std::vector<int>& mapping) {
      std::vector<CellRecord> out;
      for (int j = 1; j <= k; ++j)
        for (auto pi : kPlaneTypes) {
          const auto want = tables::table2(t, j, pi, q);
          const auto& s = stats_of(pi, t, mapping[j - 1]);
          CellRecord c{"table2", pi, t, j, mapping[j - 1], want->pi, s.pi, want->lambda, s.lambda, false};
          c.pass = s.rows > 0 && c.expected_pi == c.actual_pi && c.expected_lambda == c.actual_lambda;
          out.push_back(std::move(c));
        }
      return out;
    };
    std::vector<int> mapping(k);
    std::iota(mapping.begin(), mapping.end(), 1);
    const auto identity = mapping;
    std::vector<CellRecord> chosen = cells_for(identity);
    const auto all_pass = [](const std::vector<CellRecord>& v) {
      return std::all_of(v.begin(), v.end(), [](const auto& c) { return c.pass; });
    };
    if (!all_pass(chosen)) {
      while (std::next_permutation(mapping.begin(), mapping.end())) {
        bool sizes_match = true;
        for (int j = 1; j <= k; ++j)
          sizes_match = sizes_match && tables::table2_orbit_size(t, j, q) == tables::table2_orbit_size(t, mapping[j - 1], q);
        if (!sizes_match) continue;
        auto candidate = cells_for(mapping);
        if (all_pass(candidate)) {
          chosen = std::move(candidate);
          report_.swaps.push_back({t, mapping});
          break;
        }
      }
    }
    for (auto& c : chosen) add_cell(std::move(c));
  }
}

// ---------------------------------------------------------------- relations

void Verifier::relations() {
  const auto& tax = wb_.taxonomy();
  const long long q = wb_.q();
  const auto types = classify::line_types_for(wb_.xi());

  for (auto t : types) {
    Rational sum = 0;
    for (auto pi : kPlaneTypes) sum += stats_of(pi, t, 0).pi;
    add_check("relations", "rowSum." + nm(t), sum == Rational(q + 1),
              "sum of Pi = " + incidence::to_string(sum) + ", expected " + std::to_string(q + 1));
  }
  for (auto pi : kPlaneTypes) {
    long long sum = 0;
    for (auto t : types) sum += stats_of(pi, t, 0).lambda;
    add_check("relations", "columnSum." + nm(pi), sum == q * q + q + 1, eq_detail(q * q + q + 1, sum));
  }

  long long checked = 0, bad_double = 0, bad_zero = 0;
  for (const auto& [key, s] : stats_) {
    ++checked;
    if (Rational(s.lambda) * Rational(s.cols) != s.pi * Rational(s.rows)) ++bad_double;
    if ((s.pi.numerator() == 0) != (s.lambda == 0)) ++bad_zero;
  }
  add_check("relations", "doubleCounting", bad_double == 0,
            std::to_string(checked) + " submatrices, " + std::to_string(bad_double) + " with Lambda*#N != Pi*#O");
  add_check("relations", "zeroPattern", bad_zero == 0,
            std::to_string(checked) + " submatrices, " + std::to_string(bad_zero) + " with exactly one of Pi, Lambda zero");

  long long external = 0, bad_lines = 0;
  const auto& space = wb_.space();
  for (std::uint32_t l = 0; l < space.num_lines(); ++l) {
    if (!classify::is_external(tax.line_type(LineId{l}))) continue;
    ++external;
    std::array<long long, 5> n{};
    for (auto pi : wb_.pencil(LineId{l})) ++n[static_cast<int>(tax.plane_type(pi))];
    const auto G = n[0], two = n[1], three = n[2], one = n[3], zero = n[4];
    if (G + one + 2 * two + 3 * three != q + 1 || zero != two + 2 * three) ++bad_lines;
  }
  add_check("relations", "externalLineIdentities", bad_lines == 0,
            std::to_string(external) + " external lines, " + std::to_string(bad_lines) + " violations");

  for (auto t : types) {
    const int orbits = tax.orbit_count(t);
    if (orbits == 1) {
      bool integral = true;
      for (auto pi : kPlaneTypes) {
        const auto& s = stats_of(pi, t, 0);
        integral = integral && s.pi.denominator() == 1 && s.rows_uniform;
      }
      add_check("relations", "integrality." + nm(t), integral, "single orbit");
      continue;
    }
    bool averaging = true;
    const auto sizes = tax.orbit_sizes(t);
    const auto total = static_cast<long long>(tax.lines_of(t).size());
    for (auto pi : kPlaneTypes) {
      Rational avg = 0;
      for (int j = 1; j <= orbits; ++j)
        avg += stats_of(pi, t, j).pi * Rational(static_cast<long long>(sizes[j - 1]), total);
      averaging = averaging && avg == stats_of(pi, t, 0).pi;
    }
    add_check("relations", "averaging." + nm(t), averaging, std::to_string(orbits) + " orbits");
  }
}

// ---------------------------------------------------------------- structure

void Verifier::structure() {
  sweep();
  const auto& tax = wb_.taxonomy();
  const auto& space = wb_.space();
  const long long q = wb_.q();
  for (const auto& c : structure_checks_) add_check(c.section, c.name, c.pass, c.detail);

  if (wb_.xi() != 0) {
    const auto m = wb_.submatrix({PlaneType::Gamma, LineType::RA, 0});
    std::set<std::vector<std::size_t>> blocks;
    bool pairs = true;
    for (std::size_t r = 0; r < m.bits.rows(); ++r) {
      auto s = m.bits.row_support(r);
      pairs = pairs && s.size() == 2;
      blocks.insert(std::move(s));
    }
    const long long want = (q + 1) * q / 2;
    const bool ok = pairs && static_cast<long long>(blocks.size()) == want &&
                    static_cast<long long>(m.bits.rows()) == want;
    add_check("structure", "design[Gamma,RA]", ok,
              std::to_string(blocks.size()) + " distinct pairs of " + std::to_string(q + 1) + " planes, expected " +
                  std::to_string(want));
  }

  auto pencil_partition = [&](LineType t) {
    std::vector<int> hits(space.num_planes(), 0);
    bool all_onec = true;
    for (auto l : tax.lines_of(t))
      for (auto pi : wb_.pencil(l)) {
        ++hits[pi.value];
        all_onec = all_onec && tax.plane_type(pi) == PlaneType::OneCbar;
      }
    bool partition = all_onec;
    for (auto pi : tax.planes_of(PlaneType::OneCbar)) partition = partition && hits[pi.value] == 1;
    add_check("structure", "pencilPartition[1Cbar," + nm(t) + "]", partition,
              std::to_string(tax.lines_of(t).size()) + " pencils over " +
                  std::to_string(tax.planes_of(PlaneType::OneCbar).size()) + " planes");
  };
  pencil_partition(LineType::IC);
  if (wb_.xi() == 1) pencil_partition(LineType::IA);

  for (int j = 1; j <= tax.orbit_count(LineType::EnGamma); ++j) {
    OrbitProfile p{LineType::EnGamma, j, tax.lines_of(LineType::EnGamma, j).size(), {}, {}};
    for (auto pi : kPlaneTypes) {
      const auto& s = stats_of(pi, LineType::EnGamma, j);
      p.pi[static_cast<int>(pi)] = s.pi;
      p.lambda_counts[static_cast<int>(pi)] = s.lambda;
    }
    report_.profiles.push_back(p);
  }
}

Report run(const Workbench& wb, Options opts) { return Verifier(wb, opts).run(); }

}  // namespace cubica::verify
