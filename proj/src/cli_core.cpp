// Copyright 2026 The gibbsmix Authors
// SPDX-License-Identifier: Apache-2.0

#include "gibbsmix/cli_core.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

namespace gibbsmix {

namespace {

using ordered_json = nlohmann::ordered_json;

MixingReport evaluate(const ReportOptions& o) {
  MixingScenario scenario(o.n, o.m, o.d, o.statistics);
  std::optional<SpinAngle> angle;
  if (o.theta) angle.emplace(*o.theta);
  return mixing_report(scenario, angle);
}

const char* const kScalarHeader =
    "delta_s_informed,delta_s_ignorant,delta_s_identical,"
    "delta_s_classical_dist,delta_s_classical_indist,shannon_hp,"
    "work_variance";

std::string scalar_row(const MixingReport& r) {
  std::string row = format_double(r.delta_s_informed);
  row += ',';
  row += format_double(r.delta_s_ignorant);
  row += ',';
  row += format_double(r.delta_s_identical);
  row += ',';
  row += format_double(r.delta_s_classical_dist);
  row += ',';
  row += format_double(r.delta_s_classical_indist);
  row += ',';
  row += format_double(r.shannon_hp);
  row += ',';
  row += format_double(r.work_variance);
  return row;
}

void append_scalars(ordered_json& j, const MixingReport& r) {
  j["delta_s_informed"] = r.delta_s_informed;
  j["delta_s_ignorant"] = r.delta_s_ignorant;
  j["delta_s_identical"] = r.delta_s_identical;
  j["delta_s_classical_dist"] = r.delta_s_classical_dist;
  j["delta_s_classical_indist"] = r.delta_s_classical_indist;
  j["shannon_hp"] = r.shannon_hp;
  j["work_variance"] = r.work_variance;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const char* statistics_name(Statistics s) {
  return s == Statistics::Boson ? "boson" : "fermion";
}

std::string report_to_json(const ReportOptions& o) {
  MixingReport rep = evaluate(o);
  Temperature t{o.kT};

  ordered_json j;
  j["n"] = o.n;
  j["m"] = o.m;
  j["d"] = o.d;
  j["statistics"] = statistics_name(o.statistics);
  if (o.theta) j["theta"] = *o.theta;
  j["kT"] = o.kT;
  append_scalars(j, rep);
  j["work_informed"] = extractable_work(rep.delta_s_informed, t);
  j["work_ignorant"] = extractable_work(rep.delta_s_ignorant, t);

  ordered_json sectors = ordered_json::array();
  for (const auto& row : rep.sectors) {
    ordered_json s;
    s["J2"] = row.J.twice();
    s["p_num"] = row.p.get_num().get_str();
    s["p_den"] = row.p.get_den().get_str();
    s["dim"] = row.dim.get_str();
    s["delta_s"] = row.delta_s;
    sectors.push_back(std::move(s));
  }
  j["sectors"] = std::move(sectors);
  return j.dump(2) + "\n";
}

std::string report_to_csv(const ReportOptions& o) {
  MixingReport rep = evaluate(o);
  std::string out = kScalarHeader;
  out += '\n';
  out += scalar_row(rep);
  out += '\n';
  return out;
}

std::vector<double> sweep_values(const SweepSpec& spec) {
  if (!(spec.step > 0)) {
    throw std::invalid_argument("sweep step must be positive");
  }
  if (spec.from > spec.to) {
    throw std::invalid_argument("sweep range is empty");
  }
  std::vector<double> out;
  if (spec.param == SweepParam::Theta) {
    const double pi = std::numbers::pi;
    if (spec.from < 0 || spec.to > pi + 1e-9) {
      throw std::invalid_argument("theta sweep must stay within [0, pi]");
    }
    const double slack = spec.step * 1e-9;
    for (std::size_t k = 0;; ++k) {
      double v = spec.from + (double)k * spec.step;
      if (v > spec.to + slack) break;
      out.push_back(std::min(std::max(v, 0.0), pi));
    }
  } else {
    auto whole = [](double v) {
      return std::abs(v - std::round(v)) < 1e-9 && v >= 0 && v < 4e9;
    };
    if (!whole(spec.from) || !whole(spec.to) || !whole(spec.step)) {
      throw std::invalid_argument("swept counts must be whole numbers");
    }
    long from = std::lround(spec.from);
    long to = std::lround(spec.to);
    long step = std::lround(spec.step);
    if (spec.param == SweepParam::D && (from % 2 != 0 || step % 2 != 0)) {
      throw std::invalid_argument(
          "cell-count sweeps need even endpoints and an even step");
    }
    for (long v = from; v <= to; v += step) out.push_back((double)v);
  }
  if (out.empty()) throw std::invalid_argument("sweep range is empty");
  return out;
}

namespace {

std::vector<std::pair<double, MixingReport>> sweep_rows(
    const SweepSpec& spec) {
  std::vector<std::pair<double, MixingReport>> rows;
  for (double v : sweep_values(spec)) {
    ReportOptions o = spec.base;
    switch (spec.param) {
      case SweepParam::D:
        o.d = (unsigned)std::lround(v);
        break;
      case SweepParam::Theta:
        o.theta = v;
        break;
      case SweepParam::N:
        o.n = (unsigned)std::lround(v);
        break;
    }
    rows.emplace_back(v, evaluate(o));
  }
  return rows;
}

}  // namespace

std::string sweep_to_csv(const SweepSpec& spec) {
  std::string out = "param_value,";
  out += kScalarHeader;
  out += '\n';
  for (const auto& [v, rep] : sweep_rows(spec)) {
    out += format_double(v);
    out += ',';
    out += scalar_row(rep);
    out += '\n';
  }
  return out;
}

std::string sweep_to_json(const SweepSpec& spec) {
  ordered_json arr = ordered_json::array();
  for (const auto& [v, rep] : sweep_rows(spec)) {
    ordered_json j;
    j["param_value"] = v;
    append_scalars(j, rep);
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::vector<VerifyRow> run_verify(const VerifyOptions& o) {
  std::vector<VerifyRow> rows;
  const double thetas[] = {0.0, std::numbers::pi / 3, std::numbers::pi / 2,
                           2 * std::numbers::pi / 3, std::numbers::pi};

  for (unsigned N = 1;; ++N) {
    // Smallest admissible box: (2*2)^N within the cap.
    std::size_t smallest = 1;
    bool fits = true;
    for (unsigned i = 0; i < N; ++i) {
      smallest *= 4;
      if (smallest > o.cap) {
        fits = false;
        break;
      }
    }
    if (!fits) break;

    for (unsigned d = 2; d <= o.max_d; d += 2) {
      std::size_t dim = 1;
      bool ok = true;
      for (unsigned i = 0; i < N; ++i) {
        dim *= 2 * (std::size_t)d;
        if (dim > o.cap) {
          ok = false;
          break;
        }
      }
      if (!ok) break;

      for (Statistics stat : {Statistics::Boson, Statistics::Fermion}) {
        // Closed-form sector dimensions against projected counting.
        {
          auto brute = sector_dimensions_bruteforce(N, d, stat, o.cap);
          auto table = sector_dimensions(N, d, stat);
          std::map<HalfInt, double> closed;
          for (const auto& e : table.entries) closed[e.J] = e.dim.get_d();
          std::map<HalfInt, double> merged;
          for (const auto& [J, v] : closed) merged[J] = 0;
          for (const auto& [J, v] : brute) merged[J] = 0;
          for (auto it = merged.rbegin(); it != merged.rend(); ++it) {
            const HalfInt J = it->first;
            VerifyRow r;
            r.check = "sector_dim";
            r.n = N;
            r.m = 0;
            r.d = d;
            r.theta = 0;
            r.statistics = stat;
            r.j2 = J.twice();
            r.formula = closed.count(J) ? closed[J] : 0.0;
            auto bit = brute.find(J);
            r.oracle = bit == brute.end() ? 0.0 : (double)bit->second;
            r.pass = std::abs(r.formula - r.oracle) <= o.tolerance;
            rows.push_back(std::move(r));
          }
        }

        for (unsigned n = (N + 1) / 2; n <= N; ++n) {
          unsigned m = N - n;
          if (stat == Statistics::Fermion && (n > d / 2 || m > d / 2)) {
            continue;
          }
          MixingScenario scenario(n, m, d, stat);
          for (double theta : thetas) {
            SpinAngle angle(theta);
            DenseOperator full =
                initial_thermal_state(n, m, d, angle, stat, o.cap);

            double formula_ds = delta_s_ignorant_partial(scenario, angle);
#ifdef GIBBSMIX_VERIFY_PERTURB
            formula_ds += 1e-6;
#endif
            DenseOperator rho_x = spin_partial_trace(full);
            double before = von_neumann_entropy(rho_x);
            DenseOperator mixed = twirl_spatial(rho_x, N, d);
            double oracle_ds = von_neumann_entropy(mixed) - before;
            {
              VerifyRow r;
              r.check = "delta_s";
              r.n = n;
              r.m = m;
              r.d = d;
              r.theta = theta;
              r.statistics = stat;
              r.j2 = -1;
              r.formula = formula_ds;
              r.oracle = oracle_ds;
              r.pass = std::abs(formula_ds - oracle_ds) <= o.tolerance;
              rows.push_back(std::move(r));
            }

            auto oracle_p = sector_probabilities(full, N, d);
            auto formula_p = pj_partial(n, m, angle);
            for (auto it = oracle_p.rbegin(); it != oracle_p.rend(); ++it) {
              VerifyRow r;
              r.check = "sector_prob";
              r.n = n;
              r.m = m;
              r.d = d;
              r.theta = theta;
              r.statistics = stat;
              r.j2 = it->first.twice();
              auto fit = formula_p.find(it->first);
              r.formula = fit == formula_p.end() ? 0.0 : fit->second;
              r.oracle = it->second;
              r.pass = std::abs(r.formula - r.oracle) <= o.tolerance;
              rows.push_back(std::move(r));
            }
          }
        }
      }
    }
  }
  return rows;
}

std::string verify_to_csv(const std::vector<VerifyRow>& rows) {
  std::string out =
      "check,n,m,d,theta,statistics,J2,formula,oracle,abs_diff,status\n";
  for (const auto& r : rows) {
    out += r.check;
    out += ',';
    out += std::to_string(r.n);
    out += ',';
    out += std::to_string(r.m);
    out += ',';
    out += std::to_string(r.d);
    out += ',';
    out += format_double(r.theta);
    out += ',';
    out += statistics_name(r.statistics);
    out += ',';
    if (r.j2 >= 0) out += std::to_string(r.j2);
    out += ',';
    out += format_double(r.formula);
    out += ',';
    out += format_double(r.oracle);
    out += ',';
    out += format_double(std::abs(r.formula - r.oracle));
    out += ',';
    out += r.pass ? "pass" : "FAIL";
    out += '\n';
  }
  return out;
}

std::size_t verify_failures(const std::vector<VerifyRow>& rows) {
  std::size_t bad = 0;
  for (const auto& r : rows) {
    if (!r.pass) ++bad;
  }
  return bad;
}

}  // namespace gibbsmix
