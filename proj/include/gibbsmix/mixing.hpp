// Copyright 2026 The gibbsmix Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file mixing.hpp
 * @brief Entropy changes for mixing two spin-polarized quantum gases, from
 *        the viewpoints of informed and ignorant observers, with classical
 *        baselines and work-fluctuation statistics.
 *
 * Geometry: a box of d cells (d even), n particles starting in the left
 * d/2 cells with spin up and m in the right d/2 cells with spin down (or at
 * angle theta for partial distinguishability). Entropies are in nats; work
 * is kT times the entropy change.
 */

#ifndef GIBBSMIX_MIXING_HPP
#define GIBBSMIX_MIXING_HPP

#include <map>
#include <optional>
#include <vector>

#include "gibbsmix/dimensions.hpp"
#include "gibbsmix/exact.hpp"
#include "gibbsmix/half_int.hpp"
#include "gibbsmix/spin_algebra.hpp"

namespace gibbsmix {

/// Thrown for physically invalid scenario parameters (as opposed to
/// malformed arguments elsewhere): empty system, odd d, or Pauli-violating
/// fermion filling.
struct ScenarioError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// k_B T folded into one energy-unit parameter; natural units by default.
struct Temperature {
  double kT = 1.0;
};

/// Validated mixing problem: n left, m right, d cells total, d even.
struct MixingScenario {
  unsigned n;
  unsigned m;
  unsigned d;
  Statistics statistics;

  MixingScenario(unsigned n_, unsigned m_, unsigned d_, Statistics s);
  unsigned N() const { return n + m; }
};

/// Classical state-counting entropy change. distinguishable=true counts the
/// two gases independently; false counts one merged gas. exclusion=true is
/// the classical fermion analogue: every occupancy count C(particles +
/// cells - 1, particles) becomes C(cells, particles), which requires
/// n <= d/2, m <= d/2 (hence n+m <= d) or std::invalid_argument.
double classical_delta_s(const MixingScenario& s, bool distinguishable,
                         bool exclusion);

/// Entropy of the initial two-sided thermal state:
/// bosons ln C(n+d/2-1, n) + ln C(m+d/2-1, m); fermions ln C(d/2, n) +
/// ln C(d/2, m).
double initial_entropy(const MixingScenario& s);

/// Entropy change seen by the observer who can address the spin species:
/// each gas expands into the full box independently. Bosons
/// ln C(n+d-1, n) + ln C(m+d-1, m) minus the initial entropy; fermions with
/// C(d, n), C(d, m).
double delta_s_informed(const MixingScenario& s);

/// Entropy change for truly identical gases: final state fills the maximal
/// total-spin block, ln d_{N/2} minus the initial entropy.
double delta_s_identical(const MixingScenario& s);

/// ln d_J minus the initial entropy: the ignorant observer's entropy change
/// conditioned on total-spin sector J. The sector-conditional initial
/// entropy equals the unconditional one for every J, so the initial term is
/// J-independent. Throws SectorUnavailable (via dimensions) or
/// std::invalid_argument for a sector outside the distribution's support.
double per_sector_delta_s(const MixingScenario& s, HalfInt J);

/// Mean entropy change for the ignorant observer: sum_J p_J (ln d_J - S_0)
/// with exact rational weights p_J from pj_orthogonal, logs taken last.
double delta_s_ignorant(const MixingScenario& s);

/// Variance of per_sector_delta_s under p_J (equals the variance of
/// ln d_J; the initial-entropy shift cancels).
double work_variance(const MixingScenario& s);

/// Informed-observer entropy change when the right gas is rotated by theta:
/// sum_M q_M over the final M-resolved expansion counts, minus the initial
/// entropy. Reduces to delta_s_informed at theta = pi and to
/// delta_s_identical at theta = 0.
double delta_s_informed_partial(const MixingScenario& s, SpinAngle theta);

/// Ignorant-observer entropy change at angle theta:
/// sum_J p_J(theta) per_sector_delta_s(J).
double delta_s_ignorant_partial(const MixingScenario& s, SpinAngle theta);

/// Saturated extractable work W = kT * delta_s.
double extractable_work(double delta_s, Temperature t);

/// Everything above in one pass, plus the sector table used by the CLI.
struct MixingReport {
  double delta_s_informed = 0;
  double delta_s_ignorant = 0;
  double delta_s_identical = 0;
  double delta_s_classical_dist = 0;
  double delta_s_classical_indist = 0;
  double shannon_hp = 0;
  double work_variance = 0;
  SectorDistribution sector_distribution;  // orthogonal-spin weights, exact

  struct SectorRow {
    HalfInt J;
    Rational p;  // exact weight; for theta reports the exact dyadic value
                 // of the computed double
    BigInt dim;
    double delta_s;
  };
  std::vector<SectorRow> sectors;  // J descending

  std::map<HalfInt, double> per_sector() const;
};

/// Report at orthogonal spins, or at angle theta when given. theta affects
/// the informed/ignorant values, the sector weights, shannon_hp, and the
/// variance; the classical and identical columns have no spin dependence.
/// Classical columns use the exclusion variant for fermion scenarios.
MixingReport mixing_report(const MixingScenario& s,
                           std::optional<SpinAngle> theta = std::nullopt);

}  // namespace gibbsmix

#endif  // GIBBSMIX_MIXING_HPP
