// Copyright 2026 The gibbsmix Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file cli_core.hpp
 * @brief Testable command implementations behind the gibbsmix executable:
 *        scenario reports, parameter sweeps, and formula-vs-oracle
 *        verification, serialized as CSV or JSON.
 *
 * Serialization rules: CSV uses comma delimiters, '.' decimal point, LF
 * line endings, a mandatory header, and floats with 17 significant digits,
 * so repeated runs are byte-identical and doubles round-trip losslessly.
 * Sector weights are serialized as exact integer numerator/denominator
 * strings and J as the integer 2J.
 */

#ifndef GIBBSMIX_CLI_CORE_HPP
#define GIBBSMIX_CLI_CORE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gibbsmix/mixing.hpp"
#include "gibbsmix/oracle.hpp"

namespace gibbsmix {

/// One mixing scenario as received from the command line.
struct ReportOptions {
  unsigned n = 0;
  unsigned m = 0;
  unsigned d = 2;
  Statistics statistics = Statistics::Boson;
  std::optional<double> theta;  // spin angle; orthogonal spins when absent
  double kT = 1.0;
};

/// Double formatted with 17 significant digits ("%.17g").
std::string format_double(double v);

const char* statistics_name(Statistics s);

/// Full report as a JSON object (trailing newline included). Scalar keys
/// cover every entropy change plus extractable work; "sectors" lists
/// {J2, p_num, p_den, dim, delta_s} per total-spin sector, J descending.
std::string report_to_json(const ReportOptions& o);

/// Scalar columns only, as a one-row CSV table.
std::string report_to_csv(const ReportOptions& o);

enum class SweepParam { D, Theta, N };

/// A report template plus one swept parameter over an inclusive range.
/// The swept parameter ignores the corresponding template field.
struct SweepSpec {
  ReportOptions base;
  SweepParam param = SweepParam::D;
  double from = 0;
  double to = 0;
  double step = 1;
};

/// The swept values, in order: from, from+step, ... up to `to` inclusive.
/// Floating-point theta ranges tolerate an accumulated rounding error of
/// one part in 1e9 of a step at the upper end, and values are clamped to
/// [0, pi]. Throws std::invalid_argument for an empty or malformed range
/// (non-positive step, from > to, odd or non-integer cell counts).
std::vector<double> sweep_values(const SweepSpec& spec);

/// One row per swept value with columns param_value, delta_s_informed,
/// delta_s_ignorant, delta_s_identical, delta_s_classical_dist,
/// delta_s_classical_indist, shannon_hp, work_variance.
std::string sweep_to_csv(const SweepSpec& spec);

/// Same rows as a JSON array of objects.
std::string sweep_to_json(const SweepSpec& spec);

struct VerifyOptions {
  std::size_t cap = kDefaultSizeCap;  // bound on (2d)^N
  unsigned max_d = 18;                // additional cell-count bound
  double tolerance = 1e-7;
};

/// One comparison between a closed-form value and its brute-force
/// counterpart. j2 is -1 for whole-scenario checks and 2J for
/// sector-resolved ones.
struct VerifyRow {
  std::string check;  // "delta_s" | "sector_prob" | "sector_dim"
  unsigned n = 0;
  unsigned m = 0;
  unsigned d = 0;
  double theta = 0;
  Statistics statistics = Statistics::Boson;
  int j2 = -1;
  double formula = 0;
  double oracle = 0;
  bool pass = false;
};

/// Runs every check on the grid {n >= m, n+m >= 1, even d <= max_d,
/// (2d)^(n+m) <= cap, both statistics, theta in {0, pi/3, pi/2, 2pi/3,
/// pi}}: the ignorant observer's entropy change against the dense-matrix
/// pipeline, sector probabilities against spin-projector traces, and
/// closed-form sector dimensions against projected counting (once per
/// population size, cell count, and statistics).
std::vector<VerifyRow> run_verify(const VerifyOptions& o);

std::string verify_to_csv(const std::vector<VerifyRow>& rows);

std::size_t verify_failures(const std::vector<VerifyRow>& rows);

}  // namespace gibbsmix

#endif  // GIBBSMIX_CLI_CORE_HPP
