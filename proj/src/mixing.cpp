// Copyright 2026 The gibbsmix Authors
// SPDX-License-Identifier: Apache-2.0

#include "gibbsmix/mixing.hpp"

#include <cmath>

namespace gibbsmix {

namespace {

// Ways to put k particles into `cells` cells, with or without exclusion.
BigInt occupancy_count(unsigned cells, unsigned k, bool exclusion) {
  return exclusion ? binomial(cells, static_cast<long>(k))
                   : binomial(k + cells - 1, static_cast<long>(k));
}

// Microstate count of the initial state: both halves counted independently,
// fermions with exclusion.
BigInt initial_count(const MixingScenario& s) {
  const bool excl = s.statistics == Statistics::Fermion;
  return occupancy_count(s.d / 2, s.n, excl) *
         occupancy_count(s.d / 2, s.m, excl);
}

BigInt sector_dim(const MixingScenario& s, HalfInt J) {
  return s.statistics == Statistics::Boson
             ? dim_boson_sector(s.N(), s.d, J)
             : dim_fermion_sector(s.N(), s.d, J);
}

// Kahan-compensated accumulator for the sector averages.
struct Accumulator {
  double sum = 0.0, comp = 0.0;
  void add(double term) {
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

double weighted_sector_mean(const MixingScenario& s,
                            const std::map<HalfInt, double>& weights) {
  Accumulator acc;
  for (const auto& [J, w] : weights) {
    if (w == 0.0) continue;
    acc.add(w * per_sector_delta_s(s, J));
  }
  return acc.sum;
}

}  // namespace

MixingScenario::MixingScenario(unsigned n_, unsigned m_, unsigned d_,
                               Statistics s)
    : n(n_), m(m_), d(d_), statistics(s) {
  if (n + m == 0) throw ScenarioError("scenario: n + m must be >= 1");
  if (d < 2 || d % 2 != 0) throw ScenarioError("scenario: d must be even, >= 2");
  if (statistics == Statistics::Fermion && (n > d / 2 || m > d / 2)) {
    throw ScenarioError("scenario: fermion filling exceeds d/2 cells per side");
  }
}

double classical_delta_s(const MixingScenario& s, bool distinguishable,
                         bool exclusion) {
  if (exclusion && (s.n > s.d / 2 || s.m > s.d / 2)) {
    throw std::invalid_argument(
        "classical_delta_s: exclusion variant needs n, m <= d/2");
  }
  const BigInt init = occupancy_count(s.d / 2, s.n, exclusion) *
                      occupancy_count(s.d / 2, s.m, exclusion);
  const BigInt fin = distinguishable
                         ? occupancy_count(s.d, s.n, exclusion) *
                               occupancy_count(s.d, s.m, exclusion)
                         : occupancy_count(s.d, s.N(), exclusion);
  Rational ratio(fin, init);
  ratio.canonicalize();
  return ln_ratio(ratio);
}

double initial_entropy(const MixingScenario& s) {
  Rational r(initial_count(s), 1);
  return ln_ratio(r);
}

double delta_s_informed(const MixingScenario& s) {
  const bool excl = s.statistics == Statistics::Fermion;
  const BigInt fin =
      occupancy_count(s.d, s.n, excl) * occupancy_count(s.d, s.m, excl);
  Rational ratio(fin, initial_count(s));
  ratio.canonicalize();
  return ln_ratio(ratio);
}

double delta_s_identical(const MixingScenario& s) {
  const bool excl = s.statistics == Statistics::Fermion;
  if (excl && s.N() > s.d) {
    throw std::invalid_argument("delta_s_identical: fermion capacity exceeded");
  }
  Rational ratio(occupancy_count(s.d, s.N(), excl), initial_count(s));
  ratio.canonicalize();
  return ln_ratio(ratio);
}

double per_sector_delta_s(const MixingScenario& s, HalfInt J) {
  // One log of one exact ratio: no cancellation between final and initial
  // terms even when the two counts are astronomically large.
  Rational ratio(sector_dim(s, J), initial_count(s));
  ratio.canonicalize();
  return ln_ratio(ratio);
}

double delta_s_ignorant(const MixingScenario& s) {
  Accumulator acc;
  for (const auto& e : pj_orthogonal(s.n, s.m).entries) {
    acc.add(e.p.get_d() * per_sector_delta_s(s, e.J));
  }
  return acc.sum;
}

double work_variance(const MixingScenario& s) {
  // Two passes around the mean: the centered form cannot go negative,
  // unlike E[x^2] - E[x]^2 which loses to cancellation when the sector
  // values are (nearly) equal.
  const auto dist = pj_orthogonal(s.n, s.m);
  std::vector<double> values;
  values.reserve(dist.entries.size());
  Accumulator mean;
  for (const auto& e : dist.entries) {
    values.push_back(per_sector_delta_s(s, e.J));
    mean.add(e.p.get_d() * values.back());
  }
  Accumulator var;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double dev = values[i] - mean.sum;
    var.add(dist.entries[i].p.get_d() * dev * dev);
  }
  return var.sum;
}

double delta_s_informed_partial(const MixingScenario& s, SpinAngle theta) {
  const bool excl = s.statistics == Statistics::Fermion;
  const unsigned N = s.N();
  const BigInt init = initial_count(s);
  Accumulator acc;
  for (const auto& [M, qM] : qm_distribution(s.n, s.m, theta)) {
    if (qM == 0.0) continue;
    // N/2 - M spins point down, N/2 + M up; each group expands into the
    // full box.
    const unsigned down = (N - M.twice()) / 2;
    const unsigned up = (N + M.twice()) / 2;
    const BigInt fin =
        occupancy_count(s.d, down, excl) * occupancy_count(s.d, up, excl);
    Rational ratio(fin, init);
    ratio.canonicalize();
    acc.add(qM * ln_ratio(ratio));
  }
  return acc.sum;
}

double delta_s_ignorant_partial(const MixingScenario& s, SpinAngle theta) {
  return weighted_sector_mean(s, pj_partial(s.n, s.m, theta));
}

double extractable_work(double delta_s, Temperature t) {
  if (!(t.kT > 0)) throw std::invalid_argument("extractable_work: kT must be > 0");
  return t.kT * delta_s;
}

std::map<HalfInt, double> MixingReport::per_sector() const {
  std::map<HalfInt, double> out;
  for (const auto& row : sectors) out[row.J] = row.delta_s;
  return out;
}

MixingReport mixing_report(const MixingScenario& s,
                           std::optional<SpinAngle> theta) {
  MixingReport rep;
  rep.delta_s_identical = delta_s_identical(s);
  const bool excl = s.statistics == Statistics::Fermion;
  rep.delta_s_classical_dist = classical_delta_s(s, true, excl);
  rep.delta_s_classical_indist = classical_delta_s(s, false, excl);
  rep.sector_distribution = pj_orthogonal(s.n, s.m);

  if (!theta) {
    rep.delta_s_informed = delta_s_informed(s);
    rep.delta_s_ignorant = delta_s_ignorant(s);
    std::vector<Rational> probs;
    for (const auto& e : rep.sector_distribution.entries) probs.push_back(e.p);
    rep.shannon_hp = shannon_entropy(probs);

    for (const auto& e : rep.sector_distribution.entries) {
      MixingReport::SectorRow row;
      row.J = e.J;
      row.p = e.p;
      row.dim = sector_dim(s, e.J);
      row.delta_s = per_sector_delta_s(s, e.J);
      rep.sectors.push_back(std::move(row));
    }
    Accumulator var;
    for (const auto& row : rep.sectors) {
      const double dev = row.delta_s - rep.delta_s_ignorant;
      var.add(row.p.get_d() * dev * dev);
    }
    rep.work_variance = var.sum;
    return rep;
  }

  rep.delta_s_informed = delta_s_informed_partial(s, *theta);
  const auto pth = pj_partial(s.n, s.m, *theta);

  Accumulator hp, mean;
  for (const auto& [J, p] : pth) {
    if (p > 0.0) hp.add(-p * std::log(p));
  }
  rep.shannon_hp = hp.sum;
  // Sector rows ordered J descending to match the orthogonal layout.
  for (auto it = pth.rbegin(); it != pth.rend(); ++it) {
    MixingReport::SectorRow row;
    row.J = it->first;
    Rational p;
    mpq_set_d(p.get_mpq_t(), it->second);  // exact dyadic value of the double
    row.p = p;
    row.dim = sector_dim(s, row.J);
    row.delta_s = per_sector_delta_s(s, row.J);
    mean.add(it->second * row.delta_s);
    rep.sectors.push_back(std::move(row));
  }
  rep.delta_s_ignorant = mean.sum;
  Accumulator var;
  for (const auto& row : rep.sectors) {
    const double dev = row.delta_s - rep.delta_s_ignorant;
    var.add(row.p.get_d() * dev * dev);
  }
  rep.work_variance = var.sum;
  return rep;
}

}  // namespace gibbsmix
