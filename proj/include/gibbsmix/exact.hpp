// Copyright 2026 The gibbsmix Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file exact.hpp
 * @brief Arbitrary-precision combinatorics and high-accuracy logarithms of
 *        exact ratios.
 *
 * All probabilities and dimension ratios in the library are held as exact
 * rationals; conversion to double happens only at the final logarithm.
 */

#ifndef GIBBSMIX_EXACT_HPP
#define GIBBSMIX_EXACT_HPP

#include <gmpxx.h>

#include <span>

namespace gibbsmix {

/// Arbitrary-precision signed integer. Exact at any magnitude used here
/// (factorials beyond 2e5 included).
using BigInt = mpz_class;

/// Arbitrary-precision rational, kept in lowest terms with positive
/// denominator (gmp canonical form).
using Rational = mpq_class;

/// k!, exact. Memoized internally; safe to call from any thread.
BigInt factorial(unsigned long k);

/// C(a, b), exact. Returns 0 when b < 0 or b > a, so coupling sums may run
/// over unrestricted indices.
BigInt binomial(unsigned long a, long b);

/// ln(r) for an exact ratio r > 0, relative error <= 4 ulp at any operand
/// bit length. The ratio is never squeezed through a double first; operands
/// with 1e5-bit factorials are fine. Throws std::domain_error if r <= 0.
double ln_ratio(const Rational& r);

/// -sum p_i ln p_i with 0 ln 0 := 0. Entries must be >= 0 and sum to exactly
/// 1 (checked in rational arithmetic); otherwise std::invalid_argument.
double shannon_entropy(std::span<const Rational> p);

}  // namespace gibbsmix

#endif  // GIBBSMIX_EXACT_HPP
