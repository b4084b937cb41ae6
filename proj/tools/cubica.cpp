// cubica: verify the plane-line incidence tables of PG(3,q) under the twisted
// cubic stabilizer, print orbit censuses, and export incidence submatrices.
//
// Exit status: 0 success, 1 a verification failed, 2 invalid input, 3 I/O.

#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cubica/classify.hpp"
#include "cubica/error.hpp"
#include "cubica/kernels.hpp"
#include "cubica/matrix_io.hpp"
#include "cubica/report.hpp"
#include "cubica/verify.hpp"
#include "cubica/workbench.hpp"

namespace {

using namespace cubica;

constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitIo = 3;

int max_q_from_env() {
  if (const char* env = std::getenv("CUBICA_MAX_Q")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring CUBICA_MAX_Q=" << env << '\n';
  }
  return gf::kDefaultMaxQ;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error(Errc::Io, "cannot open " + out_path + " for writing");
  out << text;
  if (!out.flush()) throw Error(Errc::Io, "write failed: " + out_path);
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::NotAPrimePower:
    case Errc::BoundExceeded:
    case Errc::InvalidSelector: return kExitInput;
    case Errc::Io: return kExitIo;
    default: return kExitFailed;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plane-line incidence of PG(3,q) under the twisted cubic stabilizer"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads (overrides CUBICA_THREADS)")->check(CLI::PositiveNumber);

  int q = 0;
  std::string format;
  std::string out_path;
  bool fail_fast = false;

  auto* verify_cmd = app.add_subcommand("verify", "Check censuses, tables, relations and structure for q");
  verify_cmd->add_option("q", q, "Field order")->required();
  verify_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  verify_cmd->add_option("--out", out_path, "Write the report here instead of stdout");
  verify_cmd->add_flag("--fail-fast", fail_fast, "Stop at the first failed check");

  auto* report_cmd = app.add_subcommand("report", "Write the verification report; failed checks do not change the exit status");
  report_cmd->add_option("q", q, "Field order")->required();
  report_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  report_cmd->add_option("--out", out_path, "Write the report here instead of stdout");

  auto* orbits_cmd = app.add_subcommand("orbits", "Print plane and line orbit censuses as JSON");
  orbits_cmd->add_option("q", q, "Field order")->required();

  std::string pi_name, lambda_name;
  int orbit = 0;
  auto* export_cmd = app.add_subcommand("export", "Write one incidence submatrix");
  export_cmd->add_option("q", q, "Field order")->required();
  export_cmd->add_option("--pi", pi_name, "Plane type: Gamma, 2C, 3C, 1Cbar, 0C")->required();
  export_cmd->add_option("--lambda", lambda_name, "Line class: RC, T, IC, UG, UnG, RA, IA, EG, EnG, A, EA")
      ->required();
  export_cmd->add_option("--orbit", orbit, "Orbit index within the class (1-based)")->check(CLI::PositiveNumber);
  export_cmd->add_option("--format", format, "mm or alist")->required()->check(CLI::IsMember({"mm", "alist"}));
  export_cmd->add_option("--out", out_path, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  kernels::apply_thread_env();
  if (threads > 0) omp_set_num_threads(threads);

  try {
    const Workbench wb(q, max_q_from_env());

    if (*verify_cmd || *report_cmd) {
      const auto report = verify::run(wb, verify::Options{fail_fast, 9});
      if (format == "csv") {
        std::ostringstream csv;
        report::write_csv(csv, report);
        emit(csv.str(), out_path);
      } else {
        emit(report::to_json(report).dump(2) + "\n", out_path);
      }
      std::cerr << "q=" << q << ": " << report.cells.size() - report.failed_cells() << "/" << report.cells.size()
                << " cells, " << report.checks.size() - report.failed_checks() << "/" << report.checks.size()
                << " checks passed" << (report.stopped_early ? " (stopped early)" : "") << '\n';
      return report.pass() || *report_cmd ? 0 : kExitFailed;
    }

    if (*orbits_cmd) {
      std::cout << report::taxonomy_json(wb).dump(2) << '\n';
      return 0;
    }

    const auto pi = classify::parse_plane_type(pi_name);
    if (!pi) throw Error(Errc::InvalidSelector, "unknown plane type '" + pi_name + "'");
    const auto lambda = classify::parse_line_type(lambda_name);
    if (!lambda) throw Error(Errc::InvalidSelector, "unknown line class '" + lambda_name + "'");
    const auto m = wb.submatrix({*pi, *lambda, orbit});
    const auto fmt = *matrix_io::parse_format(format);
    matrix_io::write_file(out_path, m.bits, fmt);
    std::cout << "wrote " << out_path << ": " << m.bits.rows() << " x " << m.bits.cols() << ", " << m.bits.count()
              << " ones\n";
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFailed;
  }
}
