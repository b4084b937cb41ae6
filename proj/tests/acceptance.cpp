// Acceptance run over q in {2,3,4,5,7,8,9,11,13}: prints one PASS/FAIL line
// per criterion and exits non-zero if any criterion fails.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cubica/classify.hpp"
#include "cubica/gf.hpp"
#include "cubica/incidence.hpp"
#include "cubica/kernels.hpp"
#include "cubica/matrix_io.hpp"
#include "cubica/tables.hpp"
#include "cubica/workbench.hpp"
#include "oracle.hpp"

namespace {

using namespace cubica;
using classify::LineType;
using classify::PlaneType;
using classify::kPlaneTypes;
using incidence::Rational;
using incidence::Selector;
using pg3::LineId;
using pg3::PlaneId;
using pg3::PointId;

std::string nm(PlaneType t) { return std::string(classify::name(t)); }
std::string nm(LineType t) { return std::string(classify::name(t)); }
std::string rs(const Rational& r) { return incidence::to_string(r); }

struct Criterion {
  int id;
  std::string title;
  bool pass = true;
  long long checked = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    pass = false;
    if (failures.size() < 8) failures.push_back(what);
  }
};

std::map<int, Criterion> criteria;

Criterion& crit(int id) { return criteria.at(id); }

struct Cache {
  const Workbench& wb;
  std::map<std::tuple<int, int, int>, incidence::IncidenceStats> stats;

  const incidence::IncidenceStats& at(PlaneType pi, LineType t, int orbit) {
    const auto key = std::make_tuple(static_cast<int>(pi), static_cast<int>(t), orbit);
    auto it = stats.find(key);
    if (it == stats.end()) it = stats.emplace(key, incidence::stats(wb.submatrix({pi, t, orbit}))).first;
    return it->second;
  }
};

std::string tag(int q, PlaneType pi, LineType t, int orbit = 0) {
  return "q=" + std::to_string(q) + " [" + nm(pi) + "," + nm(t) + (orbit ? std::to_string(orbit) : "") + "]";
}

bool cell_matches(const incidence::IncidenceStats& s, const tables::Cell& c) {
  return s.pi == c.pi && s.lambda == c.lambda;
}

std::string cell_detail(const incidence::IncidenceStats& s, const tables::Cell& c) {
  return "Pi " + rs(s.pi) + " vs " + rs(c.pi) + ", Lambda " + std::to_string(s.lambda) + " vs " +
         std::to_string(c.lambda);
}

// Criterion 1.
void census(const Workbench& wb) {
  const long q = wb.q();
  if (q < 5) return;
  auto& c = crit(1);
  const auto& tax = wb.taxonomy();
  long long total = 0;
  for (auto t : kPlaneTypes)
    c.expect(static_cast<long long>(tax.planes_of(t).size()) == tables::plane_class_size(t, q),
             "q=" + std::to_string(q) + " planes " + nm(t));
  for (auto t : classify::line_types_for(wb.xi())) {
    total += static_cast<long long>(tax.lines_of(t).size());
    c.expect(static_cast<long long>(tax.lines_of(t).size()) == tables::line_class_size(t, q),
             "q=" + std::to_string(q) + " lines " + nm(t));
  }
  c.expect(total == static_cast<long long>(wb.space().num_lines()), "q=" + std::to_string(q) + " line total");
  if (q == 5) {
    const std::vector<std::size_t> planes{6, 30, 20, 60, 40};
    for (std::size_t i = 0; i < 5; ++i) c.expect(tax.planes_of(kPlaneTypes[i]).size() == planes[i], "q=5 literal planes");
    const std::vector<std::pair<LineType, std::size_t>> lines{
        {LineType::RC, 15},      {LineType::T, 6},       {LineType::IC, 10},     {LineType::UGamma, 30},
        {LineType::UnGamma, 120}, {LineType::RA, 15},     {LineType::IA, 10},     {LineType::EGamma, 120},
        {LineType::EnGamma, 480}};
    for (auto [t, n] : lines) c.expect(tax.lines_of(t).size() == n, "q=5 literal " + nm(t));
    c.expect(total == 806, "q=5 total 806");
  }
  if (q == 9) {
    const std::vector<std::pair<LineType, std::size_t>> lines{
        {LineType::RC, 45},       {LineType::T, 10},       {LineType::IC, 36}, {LineType::UGamma, 90},
        {LineType::UnGamma, 720}, {LineType::EnGamma, 5760}, {LineType::Axis, 1}, {LineType::EA, 800}};
    for (auto [t, n] : lines) c.expect(tax.lines_of(t).size() == n, "q=9 literal " + nm(t));
    c.expect(total == 7462, "q=9 total 7462");
  }
}

// Criteria 2 and 4.
void table1(const Workbench& wb, Cache& cache) {
  const long q = wb.q();
  auto& c = q >= 5 ? crit(2) : crit(4);
  for (auto t : classify::line_types_for(wb.xi()))
    for (auto pi : kPlaneTypes) {
      const auto want = tables::table1(t, pi, q);
      if (!want) {
        c.expect(false, tag(q, pi, t) + " has no closed form");
        continue;
      }
      const auto& s = cache.at(pi, t, 0);
      c.expect(cell_matches(s, *want), tag(q, pi, t) + ": " + cell_detail(s, *want));
    }
  if (q < 5) {
    c.expect(wb.group().order() == static_cast<std::size_t>(q * q * q - q), "q=" + std::to_string(q) + " group order");
    return;
  }
  struct Literal {
    long q;
    PlaneType pi;
    LineType t;
    Rational p;
    long long l;
  };
  const std::vector<Literal> literals{
      {5, PlaneType::TwoC, LineType::RC, 2, 1},         {5, PlaneType::ThreeC, LineType::RC, 4, 3},
      {9, PlaneType::Gamma, LineType::Axis, 10, 1},     {7, PlaneType::Gamma, LineType::IC, 0, 0},
      {9, PlaneType::TwoC, LineType::EA, {9, 10}, 8},   {7, PlaneType::ThreeC, LineType::RA, 2, 1},
      {5, PlaneType::ZeroC, LineType::IA, 4, 1},        {9, PlaneType::ZeroC, LineType::EnGamma, {27, 8}, 81}};
  for (const auto& lit : literals) {
    if (lit.q != q) continue;
    const auto& s = cache.at(lit.pi, lit.t, 0);
    c.expect(s.pi == lit.p && s.lambda == lit.l, tag(q, lit.pi, lit.t) + " literal: " + rs(s.pi) + ", " +
                                                     std::to_string(s.lambda));
  }
}

// Criterion 3.
void table2(const Workbench& wb, Cache& cache) {
  const long q = wb.q();
  auto& c = crit(3);
  const auto& tax = wb.taxonomy();
  const bool odd = q % 2 == 1;
  const int xi = wb.xi();
  const long half = (q * q * q - q) / 2;

  std::map<LineType, std::vector<std::size_t>> splits;
  if (!odd) splits[LineType::UGamma] = {static_cast<std::size_t>(q + 1), static_cast<std::size_t>(q * q - 1)};
  if (odd) splits[LineType::UnGamma] = {static_cast<std::size_t>(half), static_cast<std::size_t>(half)};
  if (odd && xi != 0) splits[LineType::EGamma] = {static_cast<std::size_t>(half), static_cast<std::size_t>(half)};
  if (xi == 0)
    splits[LineType::EA] = {static_cast<std::size_t>(q * q * q - q), static_cast<std::size_t>((q * q - 1) / 2),
                            static_cast<std::size_t>((q * q - 1) / 2)};
  for (const auto& [t, want] : splits) {
    auto got = tax.orbit_sizes(t);
    auto sorted_want = want;
    std::sort(got.begin(), got.end());
    std::sort(sorted_want.begin(), sorted_want.end());
    c.expect(got == sorted_want, "q=" + std::to_string(q) + " " + nm(t) + " orbit split");
  }
  for (auto t : classify::line_types_for(xi))
    if (!splits.count(t) && t != LineType::EnGamma)
      c.expect(tax.orbit_count(t) == 1, "q=" + std::to_string(q) + " " + nm(t) + " single orbit");

  if (q < 5) return;
  for (const auto& [t, want] : splits) {
    if (!tables::table2_applies(t, q)) continue;
    const int n = static_cast<int>(want.size());
    if (tax.orbit_count(t) != n) continue;
    std::vector<int> perm(n);
    for (int j = 0; j < n; ++j) perm[j] = j + 1;
    std::optional<std::vector<int>> match;
    do {
      bool ok = true;
      for (int j = 1; j <= n && ok; ++j) {
        ok = tax.lines_of(t, perm[j - 1]).size() == static_cast<std::size_t>(tables::table2_orbit_size(t, j, q));
        for (auto pi : kPlaneTypes) {
          if (!ok) break;
          const auto cell = tables::table2(t, j, pi, q);
          ok = cell && cell_matches(cache.at(pi, t, perm[j - 1]), *cell);
        }
      }
      if (ok) {
        match = perm;
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    c.expect(match.has_value(), "q=" + std::to_string(q) + " " + nm(t) + " per-orbit cells");
    if (match && *match != [&] {
          std::vector<int> id(n);
          for (int j = 0; j < n; ++j) id[j] = j + 1;
          return id;
        }()) {
      std::string m;
      for (int j = 0; j < n; ++j) m += (j ? "," : "") + std::to_string(j + 1) + "->" + std::to_string((*match)[j]);
      c.notes.push_back("q=" + std::to_string(q) + " " + nm(t) + " labels swapped (" + m + ")");
    }
    if (q == 7 && t == LineType::EGamma && match) {
      const auto& s = cache.at(PlaneType::ThreeC, t, (*match)[1]);
      c.expect(s.pi == Rational(0) && s.lambda == 0, "q=7 [3C,EG2] zero cell");
    }
    if (q == 9 && t == LineType::EA && match) {
      const auto& s = cache.at(PlaneType::ZeroC, t, (*match)[1]);
      c.expect(s.pi == Rational(6) && s.lambda == 1, "q=9 [0C,EA2] = 6, 1");
    }
    if (q == 5 && t == LineType::UnGamma && match) {
      const auto& s = cache.at(PlaneType::TwoC, t, (*match)[1]);
      c.expect(s.pi == Rational(3) && s.lambda == 6, "q=5 [2C,UnG2] = 3, 6");
    }
    if (t == LineType::EGamma) {
      const long long beta = q % 4 == 1 ? 1 : -1;
      const auto& s = cache.at(PlaneType::TwoC, t, 1);
      c.expect(s.pi == Rational(beta + 1), "q=" + std::to_string(q) + " [2C,EG] at the pinned line = beta+1");
    }
    if (q == 8 && t == LineType::UGamma && match) {
      const auto& s = cache.at(PlaneType::TwoC, t, (*match)[0]);
      c.expect(s.pi == Rational(8) && s.lambda == 1, "q=8 [2C,UG1] = 8, 1");
    }
  }
}

// Criterion 5.
void relations(const Workbench& wb, Cache& cache) {
  const long long q = wb.q();
  auto& c = crit(5);
  const auto& tax = wb.taxonomy();
  const auto types = classify::line_types_for(wb.xi());
  for (auto t : types)
    for (int j = 0; j <= (tax.orbit_count(t) > 1 ? tax.orbit_count(t) : 0); ++j) {
      Rational sum = 0;
      for (auto pi : kPlaneTypes) {
        const auto& s = cache.at(pi, t, j);
        sum += s.pi;
        c.expect(Rational(s.lambda) * Rational(s.cols) == s.pi * Rational(s.rows),
                 tag(static_cast<int>(q), pi, t, j) + " double counting");
      }
      c.expect(sum == Rational(q + 1), "q=" + std::to_string(q) + " row sum " + nm(t) + std::to_string(j));
    }
  for (auto pi : kPlaneTypes) {
    long long sum = 0;
    for (auto t : types) sum += cache.at(pi, t, 0).lambda;
    c.expect(sum == q * q + q + 1, "q=" + std::to_string(q) + " column sum " + nm(pi));
  }
  for (std::uint32_t l = 0; l < wb.space().num_lines(); ++l) {
    if (!classify::is_external(tax.line_type(LineId{l}))) continue;
    std::array<long long, 5> n{};
    for (auto pi : wb.space().planes_through(LineId{l})) ++n[static_cast<int>(tax.plane_type(pi))];
    const long long g = n[0], two = n[1], three = n[2], one = n[3], zero = n[4];
    c.expect(g + one + 2 * two + 3 * three == q + 1 && zero == two + 2 * three,
             "q=" + std::to_string(q) + " external line " + std::to_string(l));
  }
}

// Criterion 6.
void structure(const Workbench& wb, Cache& cache) {
  const long long q = wb.q();
  auto& c = crit(6);
  const auto& tax = wb.taxonomy();
  const auto& space = wb.space();
  const int xi = wb.xi();

  if (xi != 0) {
    const auto m = wb.submatrix({PlaneType::Gamma, LineType::RA, 0});
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    bool two = true;
    for (std::size_t r = 0; r < m.bits.rows(); ++r) {
      const auto s = m.bits.row_support(r);
      two = two && s.size() == 2;
      if (s.size() == 2) pairs.insert({s[0], s[1]});
    }
    const auto want = static_cast<std::size_t>((q + 1) * q / 2);
    c.expect(two && pairs.size() == want && m.bits.rows() == want && m.cols.size() == static_cast<std::size_t>(q + 1),
             "q=" + std::to_string(q) + " [Gamma,RA] design");
  }

  for (auto t : classify::line_types_for(xi))
    for (int j = 0; j <= (tax.orbit_count(t) > 1 ? tax.orbit_count(t) : 0); ++j)
      for (auto pi : kPlaneTypes) {
        const auto& s = cache.at(pi, t, j);
        if (s.lambda != 1 || !s.pi_exact) continue;
        const auto m = wb.submatrix({pi, t, j});
        const auto k = incidence::identity_blocks(m.bits);
        c.expect(k && static_cast<long long>(*k) == *s.pi_exact, tag(static_cast<int>(q), pi, t, j) + " identity concatenation");
      }

  std::vector<LineType> stacked{LineType::UGamma, xi == 0 ? LineType::EA : LineType::EGamma};
  for (auto t : stacked)
    for (int j = 0; j <= (tax.orbit_count(t) > 1 ? tax.orbit_count(t) : 0); ++j) {
      const auto m = wb.submatrix({PlaneType::Gamma, t, j});
      bool one_gamma = true;
      for (std::size_t r = 0; r < m.bits.rows(); ++r) one_gamma = one_gamma && m.bits.row_sum(r) == 1;
      const auto k = incidence::identity_blocks(m.bits.transposed());
      const auto& s = cache.at(PlaneType::Gamma, t, j);
      c.expect(one_gamma && k && static_cast<long long>(*k) == s.lambda,
               tag(static_cast<int>(q), PlaneType::Gamma, t, j) + " identity stack");
    }

  auto partition = [&](LineType t) {
    std::vector<int> hits(space.num_planes(), 0);
    bool only_onec = true;
    for (auto l : tax.lines_of(t))
      for (auto pi : space.planes_through(l)) {
        ++hits[pi.value];
        only_onec = only_onec && tax.plane_type(pi) == PlaneType::OneCbar;
      }
    bool once = true;
    for (auto pi : tax.planes_of(PlaneType::OneCbar)) once = once && hits[pi.value] == 1;
    c.expect(only_onec && once, "q=" + std::to_string(q) + " 1Cbar pencil partition by " + nm(t));
  };
  partition(LineType::IC);
  if (xi == 1) partition(LineType::IA);
}

// Criterion 7.
void geometry(const Workbench& wb) {
  const long long q = wb.q();
  auto& c = crit(7);
  const auto& space = wb.space();
  const auto& cub = wb.cubic();
  const auto& tax = wb.taxonomy();

  std::vector<LineId> chords = cub.real_chords();
  chords.insert(chords.end(), cub.tangents().begin(), cub.tangents().end());
  chords.insert(chords.end(), cub.imaginary_chords().begin(), cub.imaginary_chords().end());
  std::vector<int> cover(space.num_points(), 0);
  std::vector<std::vector<PointId>> pts(chords.size());
  for (std::size_t i = 0; i < chords.size(); ++i) {
    pts[i] = space.points_on(chords[i]);
    std::sort(pts[i].begin(), pts[i].end());
    for (auto p : pts[i]) ++cover[p.value];
  }
  long long off = 0, bad_cover = 0;
  for (std::uint32_t p = 0; p < space.num_points(); ++p) {
    if (cub.on_cubic(PointId{p})) continue;
    ++off;
    bad_cover += cover[p] != 1;
  }
  c.expect(bad_cover == 0 && off == pg3::theta(3, q) - (q + 1), "q=" + std::to_string(q) + " one chord per point off C");

  long long bad_meet = 0;
  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      std::vector<PointId> common;
      std::set_intersection(pts[i].begin(), pts[i].end(), pts[j].begin(), pts[j].end(), std::back_inserter(common));
      for (auto p : common) bad_meet += !cub.on_cubic(p);
    }
  c.expect(bad_meet == 0, "q=" + std::to_string(q) + " chords meet only on C");

  if (wb.xi() == 0) return;
  const auto& pol = cub.polarity();
  bool involution = true;
  for (std::uint32_t p = 0; p < space.num_points(); ++p)
    involution = involution && pol.plane_to_point(pol.point_to_plane(PointId{p})) == PointId{p};
  for (std::uint32_t l = 0; l < space.num_lines(); ++l)
    involution = involution && pol.line_to_line(pol.line_to_line(LineId{l})) == LineId{l};
  c.expect(involution, "q=" + std::to_string(q) + " polarity involution");

  auto image = [&](const std::vector<LineId>& ls) {
    std::set<LineId> out;
    for (auto l : ls) out.insert(pol.line_to_line(l));
    return out;
  };
  auto as_set = [](const std::vector<LineId>& ls) { return std::set<LineId>(ls.begin(), ls.end()); };
  std::set<LineId> meets;
  const auto& osc = cub.osculating_planes();
  for (std::size_t i = 0; i < osc.size(); ++i)
    for (std::size_t j = i + 1; j < osc.size(); ++j) meets.insert(space.plane_meet(osc[i], osc[j]));
  c.expect(image(cub.real_chords()) == as_set(tax.lines_of(LineType::RA)), "q=" + std::to_string(q) + " RC -> RA");
  c.expect(meets == as_set(tax.lines_of(LineType::RA)), "q=" + std::to_string(q) + " RA = meets of osculating planes");
  c.expect(image(tax.lines_of(LineType::RA)) == as_set(cub.real_chords()), "q=" + std::to_string(q) + " RA -> RC");
  c.expect(image(cub.imaginary_chords()) == as_set(tax.lines_of(LineType::IA)), "q=" + std::to_string(q) + " IC -> IA");
  c.expect(image(tax.lines_of(LineType::IA)) == as_set(cub.imaginary_chords()), "q=" + std::to_string(q) + " IA -> IC");
  c.expect(image(cub.tangents()) == as_set(cub.tangents()), "q=" + std::to_string(q) + " T -> T");
}

// Criterion 8.
void oracle_equivalence(const Workbench& wb) {
  const long q = wb.q();
  if (q > 7) return;
  auto& c = crit(8);
  const oracle::BruteForce brute(wb.space());
  long long mismatches = 0;
  for (std::uint32_t l = 0; l < wb.space().num_lines(); ++l) {
    const LineId id{l};
    const auto want = brute.classify(id);
    const auto stored = wb.taxonomy().line_type(id);
    const auto direct = classify::classify_line(id, wb.cubic(), wb.taxonomy().plane_labels());
    if (want != stored || want != direct) {
      ++mismatches;
      c.expect(false, "q=" + std::to_string(q) + " line " + std::to_string(l) + ": oracle " + nm(want) + ", got " +
                          nm(stored) + "/" + nm(direct));
    }
  }
  c.expect(mismatches == 0, "q=" + std::to_string(q) + " " + std::to_string(wb.space().num_lines()) + " lines");
}

long long mod_pow(long long b, long long e, long long m) {
  long long r = 1;
  b %= m;
  for (; e; e >>= 1, b = b * b % m)
    if (e & 1) r = r * b % m;
  return r;
}

// Criterion 9; the test q are prime so integer arithmetic mod q is an
// independent oracle.
void character_lemma() {
  auto& c = crit(9);
  for (long long q : {5, 7, 11, 13}) {
    const auto f = gf::Field::make(static_cast<int>(q));
    const auto got = gf::character_value_counts(f);
    const int xi = static_cast<int>(q % 3 == 2 ? -1 : q % 3);
    const int beta = q % 4 == 1 ? 1 : -1;
    const int want_roots = beta + 1;
    const int want_nonsq = (static_cast<int>(q) + 2 * xi - 2 - beta) / 2;
    const long long inv3 = mod_pow(3, q - 2, q);
    int roots = 0, nonsq = 0;
    for (long long x = 1; x < q; ++x) {
      const long long v = (((q - 4 * inv3 % q) % q * x % q * x) % q + q - 3) % q;
      if (v == 0) {
        ++roots;
      } else if (mod_pow(v, (q - 1) / 2, q) == q - 1) {
        ++nonsq;
      }
    }
    c.expect(got.roots == want_roots && got.nonsquares == want_nonsq,
             "q=" + std::to_string(q) + " library (" + std::to_string(got.roots) + "," + std::to_string(got.nonsquares) +
                 ") vs formula (" + std::to_string(want_roots) + "," + std::to_string(want_nonsq) + ")");
    c.expect(roots == want_roots && nonsq == want_nonsq, "q=" + std::to_string(q) + " modular oracle");
  }
  const std::vector<std::pair<int, std::pair<int, int>>> literal{{7, {0, 4}}, {5, {2, 0}}, {13, {2, 6}}};
  for (const auto& [q, rv] : literal) {
    const auto got = gf::character_value_counts(gf::Field::make(q));
    c.expect(got.roots == rv.first && got.nonsquares == rv.second, "q=" + std::to_string(q) + " literal");
  }
}

// Criterion 10.
void export_fidelity(const Workbench& wb, Cache& cache, const std::filesystem::path& dir) {
  const long q = wb.q();
  auto& c = crit(10);
  const auto& tax = wb.taxonomy();
  std::vector<Selector> sels;
  for (auto t : classify::line_types_for(wb.xi()))
    for (auto pi : kPlaneTypes) sels.push_back({pi, t, 0});
  if (tax.orbit_count(LineType::UGamma) == 2) sels.push_back({PlaneType::Gamma, LineType::UGamma, 2});
  for (const auto& sel : sels) {
    const auto m = wb.submatrix(sel);
    const auto& s = cache.at(sel.pi, sel.lambda, sel.orbit);
    const std::string name = tag(static_cast<int>(q), sel.pi, sel.lambda, sel.orbit);
    c.expect(static_cast<long long>(m.bits.count()) == s.lambda * static_cast<long long>(m.cols.size()),
             name + " nnz = Lambda * #N");
    c.expect(kernels::max_row_overlap(m.bits.transposed(), kernels::Exec::Parallel) <= 1, name + " 4-cycle-free");
    for (auto fmt : {matrix_io::Format::MatrixMarket, matrix_io::Format::Alist}) {
      const auto path = dir / ("m" + std::to_string(q) + (fmt == matrix_io::Format::Alist ? ".alist" : ".mtx"));
      matrix_io::write_file(path, m.bits, fmt);
      c.expect(matrix_io::read_file(path, fmt) == m.bits, name + " round trip");
    }
  }
}

}  // namespace

int main() {
  criteria.emplace(1, Criterion{1, "census reproduction (q >= 5)"});
  criteria.emplace(2, Criterion{2, "class-level incidence cells (q >= 5)"});
  criteria.emplace(3, Criterion{3, "orbit splits and per-orbit incidence cells"});
  criteria.emplace(4, Criterion{4, "small q: class-level cells from the matrix-form group (q = 2, 3, 4)"});
  criteria.emplace(5, Criterion{5, "row/column sums, double counting, external-line identities"});
  criteria.emplace(6, Criterion{6, "design, identity blocks, pencil partitions"});
  criteria.emplace(7, Criterion{7, "chord cover, chord meets, polarity"});
  criteria.emplace(8, Criterion{8, "brute-force classifier agreement (q <= 7)"});
  criteria.emplace(9, Criterion{9, "quadratic-character counts"});
  criteria.emplace(10, Criterion{10, "export round trip, nnz, 4-cycle-free"});

  kernels::apply_thread_env();
  const auto dir = std::filesystem::temp_directory_path() / ("cubica_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);

  const auto start = std::chrono::steady_clock::now();
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const Workbench wb(q);
      Cache cache{wb, {}};
      census(wb);
      table1(wb, cache);
      table2(wb, cache);
      relations(wb, cache);
      structure(wb, cache);
      geometry(wb);
      oracle_equivalence(wb);
      export_fidelity(wb, cache, dir);
    } catch (const std::exception& e) {
      for (auto& [id, c] : criteria) c.expect(false, "q=" + std::to_string(q) + " aborted: " + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::fprintf(stderr, "q=%d done in %.2fs\n", q, secs);
  }
  character_lemma();
  std::filesystem::remove_all(dir);

  bool all = true;
  for (const auto& [id, c] : criteria) {
    all = all && c.pass;
    std::printf("criterion %2d: %s  %s (%lld checks)\n", id, c.pass ? "PASS" : "FAIL", c.title.c_str(), c.checked);
    for (const auto& f : c.failures) std::printf("    fail: %s\n", f.c_str());
    for (const auto& n : c.notes) std::printf("    note: %s\n", n.c_str());
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s in %.1fs\n", all ? "all criteria passed" : "some criteria FAILED", total);
  return all ? 0 : 1;
}
