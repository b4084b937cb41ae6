#pragma once

// Exhaustive checks of the censuses, both tables, the counting relations and
// the structural claims for one q. Results are data; nothing here throws on a
// failed check.

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "cubica/incidence.hpp"
#include "cubica/tables.hpp"
#include "cubica/workbench.hpp"

namespace cubica::verify {

using classify::LineType;
using classify::PlaneType;
using incidence::IncidenceStats;
using incidence::Rational;

struct CellRecord {
  std::string table;  // "table1" or "table2"
  PlaneType pi;
  LineType lambda;
  int orbit = 0;           // table label; 0 for whole classes
  int computed_orbit = 0;  // taxonomy orbit the row was matched to
  Rational expected_pi;
  Rational actual_pi;
  long long expected_lambda = 0;
  long long actual_lambda = 0;
  bool pass = false;
};

struct CheckRecord {
  std::string section;
  std::string name;
  bool pass = false;
  std::string detail;
};

// Table orbit j was matched to taxonomy orbit mapping[j-1].
struct LabelSwap {
  LineType lambda;
  std::vector<int> mapping;
};

// Per-orbit statistics without a closed form to compare against.
struct OrbitProfile {
  LineType lambda;
  int orbit = 0;
  std::size_t size = 0;
  std::array<Rational, 5> pi{};
  std::array<long long, 5> lambda_counts{};
};

struct Report {
  int q = 0;
  int xi = 0;
  gf::FieldSpec field;
  std::vector<CellRecord> cells;
  std::vector<CheckRecord> checks;
  std::vector<LabelSwap> swaps;
  std::vector<OrbitProfile> profiles;
  bool stopped_early = false;

  std::size_t failed_cells() const;
  std::size_t failed_checks() const;
  bool pass() const { return failed_cells() == 0 && failed_checks() == 0; }
};

struct Options {
  bool fail_fast = false;
  // Above this q the quadratic pairwise checks are sampled.
  int exhaustive_max_q = 9;
};

class Verifier {
 public:
  Verifier(const Workbench& wb, Options opts = {});

  // Runs every section below in order.
  Report run();

  void census();
  void group();
  void geometry();
  void field();
  void table1();
  void table2();
  void relations();
  void structure();

  const Report& report() const { return report_; }

 private:
  using Key = std::tuple<PlaneType, LineType, int>;
  struct FailFast {};

  void sweep();
  const IncidenceStats& stats_of(PlaneType pi, LineType lambda, int orbit);
  void add_check(const std::string& section, const std::string& name, bool pass, std::string detail = {});
  void add_cell(CellRecord cell);

  const Workbench& wb_;
  Options opts_;
  Report report_;
  bool swept_ = false;
  std::map<Key, IncidenceStats> stats_;
  std::vector<CheckRecord> structure_checks_;
};

Report run(const Workbench& wb, Options opts = {});

}  // namespace cubica::verify
