// Copyright 2026 The gibbsmix Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file spin_algebra.hpp
 * @brief Sector distribution p_J, squared Clebsch-Gordan coefficients, and
 *        the spin-angle generalization via the q_M distribution.
 *
 * Two spin-1/2 gases with n particles (all spin up) and m particles (spin at
 * angle theta from up) decompose over total-spin sectors J. For orthogonal
 * spins (theta = pi) the sector weights p_J are exact rationals; for general
 * theta only the binomial weights stay exact and the trigonometric factors
 * are doubles.
 */

#ifndef GIBBSMIX_SPIN_ALGEBRA_HPP
#define GIBBSMIX_SPIN_ALGEBRA_HPP

#include <map>
#include <vector>

#include "gibbsmix/exact.hpp"
#include "gibbsmix/half_int.hpp"

namespace gibbsmix {

/// Distribution over total-spin sectors J for an N-particle system.
/// Entries run from J = N/2 downward in unit steps; J below the support
/// cutoff are omitted (their weight is zero). Weights sum to exactly 1.
struct SectorDistribution {
  struct Entry {
    HalfInt J;
    Rational p;
  };
  std::vector<Entry> entries;
  unsigned N = 0;

  /// Pointer to the weight at J, or nullptr when J is outside the support.
  const Rational* find(HalfInt J) const;
};

/// Relative spin angle in radians, restricted to [0, pi]. theta = pi is the
/// orthogonal (fully distinguishable) case, theta = 0 identical gases.
struct SpinAngle {
  double theta;
  explicit SpinAngle(double t);
};

/// Sector distribution for orthogonal spins:
///   p_J = (2J+1) n! m! / [(N/2+J+1)! (N/2-J)!],  J = N/2, N/2-1, ..., |n-m|/2.
/// Exact rationals summing to 1. Throws std::invalid_argument for n = m = 0.
SectorDistribution pj_orthogonal(unsigned n, unsigned m);

/// |C(j1,m1; j2,m2; J,M)|^2 as an exact rational (Racah's closed form; the
/// signed sum is rational and the prefactor under the square root is
/// rational, so the square is exact). Returns 0 for invalid couplings
/// (M != m1+m2, J outside the triangle range, or mismatched parity).
/// Individually malformed quantum numbers (|m|>j, negative j, bad parity)
/// throw std::invalid_argument.
Rational cg_squared(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J,
                    HalfInt M);

/// Distribution over the total z-spin M induced by the angle theta:
///   q_M = C(m, N/2-M) cos(theta/2)^(m-n+2M) sin(theta/2)^(n+m-2M),
/// for M = N/2 down to (n-m)/2; a binomial distribution in k = N/2-M with
/// success probability sin^2(theta/2). Binomial weights are exact; only the
/// trigonometric powers are floating point. Values sum to 1 within 1e-12.
std::map<HalfInt, double> qm_distribution(unsigned n, unsigned m,
                                          SpinAngle theta);

/// Sector distribution at angle theta:
///   p_J(theta) = sum_M q_M |C(n/2,n/2; m/2,M-n/2; J,M)|^2,
/// for J = N/2 down to |n-m|/2. Sums to 1 within 1e-12.
std::map<HalfInt, double> pj_partial(unsigned n, unsigned m, SpinAngle theta);

}  // namespace gibbsmix

#endif  // GIBBSMIX_SPIN_ALGEBRA_HPP
