// Copyright 2026 The gibbsmix Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "gibbsmix/exact.hpp"

using namespace gibbsmix;

TEST_SUITE("exactmath") {
  TEST_CASE("factorial small values") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(12) == 479001600);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
  }

  TEST_CASE("factorial recurrence") {
    for (unsigned long k = 1; k <= 300; ++k) {
      CHECK(factorial(k) == k * factorial(k - 1));
    }
  }

  TEST_CASE("binomial boundary conventions") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(0, 1) == 0);
  }

  TEST_CASE("binomial Pascal identity") {
    for (unsigned long a = 1; a <= 500; ++a) {
      for (long b = 1; b < static_cast<long>(a); ++b) {
        CHECK(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
      }
    }
  }

  TEST_CASE("binomial symmetry and factorial agreement") {
    for (unsigned long nn = 0; nn <= 80; ++nn) {
      for (unsigned long k = 0; k <= nn; ++k) {
        CHECK(binomial(nn, static_cast<long>(k)) ==
              binomial(nn, static_cast<long>(nn - k)));
        CHECK(binomial(nn, static_cast<long>(k)) * factorial(k) *
                  factorial(nn - k) ==
              factorial(nn));
      }
    }
  }

  TEST_CASE("ln_ratio reference points") {
    CHECK(ln_ratio(Rational(1)) == 0.0);
    CHECK(std::abs(ln_ratio(Rational(2)) - std::numbers::ln2) <= 3e-16);
    CHECK(std::abs(ln_ratio(Rational(1, 3)) + std::log(3.0)) <= 1e-15);
    CHECK(std::abs(ln_ratio(Rational(3, 2)) - std::log(1.5)) <= 1e-15);
    CHECK(std::abs(ln_ratio(Rational(1, 2)) + std::numbers::ln2) <= 3e-16);
  }

  TEST_CASE("ln_ratio huge power of two") {
    BigInt big(1);
    mpz_mul_2exp(big.get_mpz_t(), big.get_mpz_t(), 4096);
    const double v = ln_ratio(Rational(big));
    const double want = 4096.0 * std::numbers::ln2;
    CHECK(std::abs(v - want) <= 1e-12 * want);
    CHECK(std::abs(ln_ratio(Rational(1, big)) + want) <= 1e-12 * want);
  }

  TEST_CASE("ln_ratio near one") {
    // 1 + 1e-30: the direct log would lose every significant bit.
    BigInt den(10);
    mpz_pow_ui(den.get_mpz_t(), den.get_mpz_t(), 30);
    Rational r(den + 1, den);
    r.canonicalize();
    const double v = ln_ratio(r);
    CHECK(v == doctest::Approx(1e-30).epsilon(1e-10));

    Rational below(den - 1, den);
    below.canonicalize();
    CHECK(ln_ratio(below) == doctest::Approx(-1e-30).epsilon(1e-10));
  }

  TEST_CASE("ln_ratio additivity with huge operands") {
    // Operands in the 1e4..1e5 bit range; the product rule must survive.
    BigInt pow7(7), pow3(3);
    mpz_pow_ui(pow7.get_mpz_t(), pow7.get_mpz_t(), 20000);
    mpz_pow_ui(pow3.get_mpz_t(), pow3.get_mpz_t(), 30000);
    Rational a(factorial(5000), pow7);
    Rational b(pow3, factorial(4000));
    a.canonicalize();
    b.canonicalize();
    Rational ab = a * b;
    ab.canonicalize();
    const double sum = ln_ratio(a) + ln_ratio(b);
    CHECK(std::abs(ln_ratio(ab) - sum) <= 1e-10 * std::abs(sum));
  }

  TEST_CASE("ln_ratio rejects non-positive ratios") {
    CHECK_THROWS_AS(ln_ratio(Rational(0)), std::domain_error);
    CHECK_THROWS_AS(ln_ratio(Rational(-3, 2)), std::domain_error);
  }

  TEST_CASE("shannon_entropy reference distributions") {
    std::vector<Rational> half{Rational(1, 2), Rational(1, 2)};
    CHECK(std::abs(shannon_entropy(half) - std::numbers::ln2) <= 1e-15);

    std::vector<Rational> skew{Rational(1, 3), Rational(2, 3)};
    const double want = std::log(3.0) - (2.0 / 3.0) * std::numbers::ln2;
    CHECK(std::abs(shannon_entropy(skew) - want) <= 1e-14);

    std::vector<Rational> degenerate{Rational(0), Rational(1)};
    CHECK(shannon_entropy(degenerate) == 0.0);
  }

  TEST_CASE("shannon_entropy uniform ten thousand outcomes") {
    std::vector<Rational> p(10000, Rational(1, 10000));
    CHECK(std::abs(shannon_entropy(p) - std::log(1e4)) <= 1e-12);
  }

  TEST_CASE("shannon_entropy validates its input") {
    std::vector<Rational> short_sum{Rational(1, 2), Rational(1, 3)};
    CHECK_THROWS_AS(shannon_entropy(short_sum), std::invalid_argument);
    std::vector<Rational> negative{Rational(3, 2), Rational(-1, 2)};
    CHECK_THROWS_AS(shannon_entropy(negative), std::invalid_argument);
  }
}
