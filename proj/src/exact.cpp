// Copyright 2026 The gibbsmix Authors
// SPDX-License-Identifier: Apache-2.0

#include "gibbsmix/exact.hpp"

#include <mpfr.h>

#include <deque>
#include <mutex>
#include <stdexcept>

namespace gibbsmix {

namespace {

// Working precision for ln_ratio. 128 bits leaves ~75 guard bits over a
// double mantissa, far more than the 4-ulp contract needs.
constexpr mpfr_prec_t kLogPrec = 128;

std::mutex g_factorial_mutex;
// deque keeps references stable while the cache grows.
std::deque<BigInt>& factorial_cache() {
  static std::deque<BigInt> cache{BigInt(1)};
  return cache;
}

}  // namespace

BigInt factorial(unsigned long k) {
  std::lock_guard<std::mutex> lock(g_factorial_mutex);
  auto& cache = factorial_cache();
  while (cache.size() <= k) {
    cache.push_back(cache.back() * static_cast<unsigned long>(cache.size()));
  }
  return cache[k];
}

BigInt binomial(unsigned long a, long b) {
  if (b < 0 || static_cast<unsigned long>(b) > a) return BigInt(0);
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), a, static_cast<unsigned long>(b));
  return result;
}

double ln_ratio(const Rational& r) {
  const int sign = sgn(r);
  if (sign <= 0) throw std::domain_error("ln_ratio: ratio must be positive");

  const BigInt& num = r.get_num();
  const BigInt& den = r.get_den();
  if (num == den) return 0.0;

  mpfr_t x;
  mpfr_init2(x, kLogPrec);
  // A ratio near 1 loses its leading bits inside mpfr_log; the difference
  // num - den is exact in integers, so route it through log1p instead.
  // The branch requires |num/den - 1| < 1/2, where log1p is stable.
  BigInt diff = num - den;
  if (mpz_sizeinbase(diff.get_mpz_t(), 2) + 2 <=
      mpz_sizeinbase(den.get_mpz_t(), 2)) {
    Rational y(diff, den);
    y.canonicalize();
    mpfr_set_q(x, y.get_mpq_t(), MPFR_RNDN);
    mpfr_log1p(x, x, MPFR_RNDN);
  } else {
    mpfr_set_q(x, r.get_mpq_t(), MPFR_RNDN);
    mpfr_log(x, x, MPFR_RNDN);
  }
  const double out = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clear(x);
  return out;
}

double shannon_entropy(std::span<const Rational> p) {
  Rational total(0);
  for (const Rational& pi : p) {
    if (sgn(pi) < 0) {
      throw std::invalid_argument("shannon_entropy: negative probability");
    }
    total += pi;
  }
  if (total != 1) {
    throw std::invalid_argument("shannon_entropy: probabilities must sum to 1");
  }
  // Kahan compensation keeps the 1e4-outcome uniform case inside 1e-12.
  double sum = 0.0, comp = 0.0;
  for (const Rational& pi : p) {
    if (sgn(pi) == 0) continue;
    const double term = -pi.get_d() * ln_ratio(pi);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace gibbsmix
