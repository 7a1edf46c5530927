// Copyright 2026 The gibbsmix Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file asymptotics.hpp
 * @brief Closed-form limits and low-density expansion terms used as
 *        convergence oracles for the exact entropy formulas.
 *
 * Everything here assumes the symmetric case n = m (N = 2n), where all
 * sector labels J are integers.
 */

#ifndef GIBBSMIX_ASYMPTOTICS_HPP
#define GIBBSMIX_ASYMPTOTICS_HPP

#include "gibbsmix/dimensions.hpp"
#include "gibbsmix/exact.hpp"
#include "gibbsmix/half_int.hpp"

namespace gibbsmix {

/// Low-density prediction for the informed/ignorant gap:
/// H(p) + n^2/(2 d^2), with H(p) evaluated exactly from pj_orthogonal(n,n).
/// The remainder of the true gap is O(n^3/d^3).
double low_density_gap_prediction(unsigned n, unsigned d);

/// Per-sector correction terms of the 1/d expansion: r1 = (J(J+1)-n)/d and
/// r2 = [2n^2 - 2n(2J(J+1)+1) + J(J+1)(J^2+J+2)] / (2d^2). Fermions flip
/// the sign of the first-order term and share the second order.
struct ExpansionTerms {
  double r1;
  double r2;
};
ExpansionTerms expansion_terms(unsigned n, unsigned d, HalfInt J,
                               Statistics statistics);

/// p_J-weighted mean of J(J+1) - n, i.e. d * sum_J p_J r1. Identically zero;
/// exposed as an exact rational so tests can assert that without tolerance.
Rational expansion_first_moment(unsigned n);

/// p_J-weighted mean of (B_J - A_J^2) where r1 = A_J/d, r2 = B_J/(2d^2);
/// equals 2 d^2 sum_J p_J (r2 - r1^2/2), identically -n^2.
Rational expansion_second_moment_residual(unsigned n);

/// Large-n asymptote of the sector-distribution Shannon entropy:
/// (1/2) ln n + (gamma/2 - ln 2 + 1). The constant is kept in its symbolic
/// form, not as a rounded decimal.
double hp_asymptote(unsigned n);

/// Large-n asymptote of the d = 2 boson ignorant entropy change (the
/// condensate limit): (1/2) ln n + ln 2 - gamma/2.
double bec_limit_mean(unsigned n);

/// H(p) for n = m via log-gamma evaluation in log space. Absolute error
/// below 1e-9; meant for n large enough that exact rationals are wasteful.
double sector_entropy_large(unsigned n);

/// sum_J p_J ln(2J+1) in log space: the exact d = 2 boson ignorant entropy
/// change at n = m (the initial entropy vanishes at d = 2).
double bec_mean_large(unsigned n);

/// Variance of ln(2J+1) under p_J, log space. Tends to pi^2/24.
double bec_variance_large(unsigned n);

}  // namespace gibbsmix

#endif  // GIBBSMIX_ASYMPTOTICS_HPP
