// Copyright 2026 The gibbsmix Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage error, 3 physics precondition violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include "gibbsmix/cli_core.hpp"

namespace {

using namespace gibbsmix;

int write_output(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file '" << path << "'\n";
    return 2;
  }
  out << payload;
  return out ? 0 : 2;
}

Statistics parse_statistics(const std::string& s) {
  return s == "fermion" ? Statistics::Fermion : Statistics::Boson;
}

bool check_cells(unsigned d) {
  if (d < 2 || d % 2 != 0) {
    std::cerr << "error: d must be even and at least 2\n";
    return false;
  }
  return true;
}

bool check_angle(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    std::cerr << "error: theta must lie in [0, pi]\n";
    return false;
  }
  return true;
}

std::string verify_to_json(const std::vector<VerifyRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["n"] = r.n;
    j["m"] = r.m;
    j["d"] = r.d;
    j["theta"] = r.theta;
    j["statistics"] = statistics_name(r.statistics);
    if (r.j2 >= 0) {
      j["J2"] = r.j2;
    } else {
      j["J2"] = nullptr;
    }
    j["formula"] = r.formula;
    j["oracle"] = r.oracle;
    j["abs_diff"] = std::abs(r.formula - r.oracle);
    j["status"] = r.pass ? "pass" : "FAIL";
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gibbsmix: entropy of mixing for two spin-polarized quantum gases in "
      "a segmented box, with exact sector decompositions and a brute-force "
      "verification mode"};
  app.require_subcommand(1);

  // report
  auto* report = app.add_subcommand(
      "report", "Evaluate one scenario and print every entropy change");
  unsigned rep_n = 0, rep_m = 0, rep_d = 0;
  std::string rep_stat;
  double rep_theta = 0.0, rep_kt = 1.0;
  std::string rep_output, rep_format = "json";
  report->add_option("--n", rep_n, "particles in the left half")->required();
  report->add_option("--m", rep_m, "particles in the right half")->required();
  report->add_option("--d", rep_d, "total number of cells (even)")
      ->required();
  report->add_option("--statistics", rep_stat, "boson or fermion")
      ->required()
      ->check(CLI::IsMember({"boson", "fermion"}));
  auto* rep_theta_opt = report->add_option(
      "--theta", rep_theta,
      "right-side spin angle in [0, pi]; omit for orthogonal spins");
  report->add_option("--kT", rep_kt, "temperature scale for work values");
  report->add_option("--output", rep_output, "write to file instead of stdout");
  report->add_option("--format", rep_format, "json (default) or csv")
      ->check(CLI::IsMember({"csv", "json"}));

  // sweep
  auto* sweep = app.add_subcommand(
      "sweep", "Evaluate a scenario across one swept parameter");
  unsigned sw_n = 0, sw_m = 0, sw_d = 0;
  std::string sw_stat, sw_param;
  double sw_theta = 0.0, sw_from = 0.0, sw_to = 0.0, sw_step = 1.0;
  std::string sw_output, sw_format = "csv";
  auto* sw_n_opt = sweep->add_option("--n", sw_n, "particles in the left half");
  auto* sw_m_opt =
      sweep->add_option("--m", sw_m, "particles in the right half");
  auto* sw_d_opt =
      sweep->add_option("--d", sw_d, "total number of cells (even)");
  sweep->add_option("--statistics", sw_stat, "boson or fermion")
      ->required()
      ->check(CLI::IsMember({"boson", "fermion"}));
  auto* sw_theta_opt = sweep->add_option(
      "--theta", sw_theta, "fixed spin angle while sweeping d or n");
  sweep->add_option("--param", sw_param, "swept parameter: d, theta, or n")
      ->required()
      ->check(CLI::IsMember({"d", "theta", "n"}));
  sweep->add_option("--from", sw_from, "first swept value")->required();
  sweep->add_option("--to", sw_to, "last swept value (inclusive)")
      ->required();
  sweep->add_option("--step", sw_step, "increment between rows")->required();
  sweep->add_option("--output", sw_output, "write to file instead of stdout");
  sweep->add_option("--format", sw_format, "csv (default) or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // verify
  auto* verify = app.add_subcommand(
      "verify",
      "Check closed forms against the brute-force pipeline on a grid");
  std::size_t ver_cap = kDefaultSizeCap;
  bool cap_given = false;
  if (const char* env = std::getenv("GIBBS_ORACLE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
      std::cerr << "error: GIBBS_ORACLE_CAP must be a positive integer\n";
      return 2;
    }
    ver_cap = (std::size_t)v;
  }
  unsigned ver_max_d = 18;
  std::string ver_output, ver_format = "csv";
  verify->add_option("--cap", ver_cap,
                     "bound on the full-space dimension (2d)^N");
  (void)cap_given;
  verify->add_option("--max-d", ver_max_d, "largest cell count in the grid");
  verify->add_option("--output", ver_output,
                     "write to file instead of stdout");
  verify->add_option("--format", ver_format, "csv (default) or json")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (report->parsed()) {
    if (!check_cells(rep_d)) return 2;
    if (rep_theta_opt->count() > 0 && !check_angle(rep_theta)) return 2;
    ReportOptions o;
    o.n = rep_n;
    o.m = rep_m;
    o.d = rep_d;
    o.statistics = parse_statistics(rep_stat);
    if (rep_theta_opt->count() > 0) o.theta = rep_theta;
    o.kT = rep_kt;
    try {
      std::string payload =
          rep_format == "csv" ? report_to_csv(o) : report_to_json(o);
      return write_output(rep_output, payload);
    } catch (const ScenarioError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 3;
    }
  }

  if (sweep->parsed()) {
    SweepSpec spec;
    if (sw_param == "d") {
      spec.param = SweepParam::D;
    } else if (sw_param == "theta") {
      spec.param = SweepParam::Theta;
    } else {
      spec.param = SweepParam::N;
    }

    auto missing = [](const char* flag) {
      std::cerr << "error: sweep requires " << flag
                << " for the chosen --param\n";
      return 2;
    };
    auto conflicting = [](const char* flag) {
      std::cerr << "error: " << flag
                << " cannot be fixed while it is the swept parameter\n";
      return 2;
    };
    switch (spec.param) {
      case SweepParam::D:
        if (sw_d_opt->count() > 0) return conflicting("--d");
        if (sw_n_opt->count() == 0) return missing("--n");
        if (sw_m_opt->count() == 0) return missing("--m");
        break;
      case SweepParam::Theta:
        if (sw_theta_opt->count() > 0) return conflicting("--theta");
        if (sw_n_opt->count() == 0) return missing("--n");
        if (sw_m_opt->count() == 0) return missing("--m");
        if (sw_d_opt->count() == 0) return missing("--d");
        break;
      case SweepParam::N:
        if (sw_n_opt->count() > 0) return conflicting("--n");
        if (sw_m_opt->count() == 0) return missing("--m");
        if (sw_d_opt->count() == 0) return missing("--d");
        break;
    }
    if (sw_d_opt->count() > 0 && !check_cells(sw_d)) return 2;
    if (sw_theta_opt->count() > 0 && !check_angle(sw_theta)) return 2;

    spec.base.n = sw_n;
    spec.base.m = sw_m;
    spec.base.d = sw_d_opt->count() > 0 ? sw_d : 2;
    spec.base.statistics = parse_statistics(sw_stat);
    if (sw_theta_opt->count() > 0) spec.base.theta = sw_theta;
    spec.from = sw_from;
    spec.to = sw_to;
    spec.step = sw_step;
    try {
      std::string payload =
          sw_format == "json" ? sweep_to_json(spec) : sweep_to_csv(spec);
      return write_output(sw_output, payload);
    } catch (const ScenarioError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 3;
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }

  // verify
  VerifyOptions vo;
  vo.cap = ver_cap;
  vo.max_d = ver_max_d;
  auto rows = run_verify(vo);
  std::size_t bad = verify_failures(rows);
  std::string payload =
      ver_format == "json" ? verify_to_json(rows) : verify_to_csv(rows);
  int rc = write_output(ver_output, payload);
  if (rc != 0) return rc;
  std::cerr << rows.size() << " checks, " << bad << " failing\n";
  return bad == 0 ? 0 : 1;
}
