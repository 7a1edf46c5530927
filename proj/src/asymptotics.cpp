// Copyright 2026 The gibbsmix Authors
// SPDX-License-Identifier: Apache-2.0

#include "gibbsmix/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "gibbsmix/spin_algebra.hpp"

namespace gibbsmix {

namespace {

void check_symmetric(unsigned n) {
  if (n < 1) throw std::invalid_argument("asymptotics: n must be >= 1");
}

// ln p_J for n = m, evaluated with lgamma:
// ln p_J = ln(2J+1) + 2 ln n! - ln (n+J+1)! - ln (n-J)!.
double ln_pj(unsigned n, unsigned J) {
  return std::log(2.0 * J + 1.0) + 2.0 * std::lgamma(n + 1.0) -
         std::lgamma(n + J + 2.0) - std::lgamma(n - J + 1.0);
}

struct Kahan {
  double sum = 0.0, comp = 0.0;
  void add(double term) {
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

// Integer second-order numerator B_J with r2 = B_J / (2 d^2).
long b_term(long n, long jj) {
  return 2 * n * n - 2 * n * (2 * jj + 1) + jj * (jj + 1 + 1);
}

}  // namespace

double low_density_gap_prediction(unsigned n, unsigned d) {
  check_symmetric(n);
  std::vector<Rational> probs;
  for (const auto& e : pj_orthogonal(n, n).entries) probs.push_back(e.p);
  const double dd = static_cast<double>(d);
  return shannon_entropy(probs) + 0.5 * n * n / (dd * dd);
}

ExpansionTerms expansion_terms(unsigned n, unsigned d, HalfInt J,
                               Statistics statistics) {
  check_symmetric(n);
  if (!J.is_integer() || J.twice() < 0 || J.twice() > 2 * static_cast<int>(n)) {
    throw std::invalid_argument("expansion_terms: J outside 0..n");
  }
  const long j = J.twice() / 2;
  const long jj = j * (j + 1);
  const double dd = static_cast<double>(d);
  ExpansionTerms terms;
  terms.r1 = (static_cast<double>(jj) - n) / dd;
  if (statistics == Statistics::Fermion) terms.r1 = -terms.r1;
  terms.r2 = static_cast<double>(b_term(n, jj)) / (2.0 * dd * dd);
  return terms;
}

Rational expansion_first_moment(unsigned n) {
  check_symmetric(n);
  Rational acc(0);
  for (const auto& e : pj_orthogonal(n, n).entries) {
    const long j = e.J.twice() / 2;
    acc += e.p * Rational(j * (j + 1) - static_cast<long>(n));
  }
  acc.canonicalize();
  return acc;
}

Rational expansion_second_moment_residual(unsigned n) {
  check_symmetric(n);
  Rational acc(0);
  for (const auto& e : pj_orthogonal(n, n).entries) {
    const long j = e.J.twice() / 2;
    const long jj = j * (j + 1);
    const long a = jj - static_cast<long>(n);
    acc += e.p * Rational(b_term(n, jj) - a * a);
  }
  acc.canonicalize();
  return acc;
}

double hp_asymptote(unsigned n) {
  check_symmetric(n);
  constexpr double kConst =
      std::numbers::egamma / 2 - std::numbers::ln2 + 1.0;
  return 0.5 * std::log(static_cast<double>(n)) + kConst;
}

double bec_limit_mean(unsigned n) {
  check_symmetric(n);
  constexpr double kConst = std::numbers::ln2 - std::numbers::egamma / 2;
  return 0.5 * std::log(static_cast<double>(n)) + kConst;
}

double sector_entropy_large(unsigned n) {
  check_symmetric(n);
  Kahan h;
  for (unsigned J = 0; J <= n; ++J) {
    const double lp = ln_pj(n, J);
    if (lp < -700.0) continue;  // weight below double underflow
    h.add(-std::exp(lp) * lp);
  }
  return h.sum;
}

double bec_mean_large(unsigned n) {
  check_symmetric(n);
  Kahan mean;
  for (unsigned J = 0; J <= n; ++J) {
    const double lp = ln_pj(n, J);
    if (lp < -700.0) continue;
    mean.add(std::exp(lp) * std::log(2.0 * J + 1.0));
  }
  return mean.sum;
}

double bec_variance_large(unsigned n) {
  check_symmetric(n);
  Kahan mean, second;
  for (unsigned J = 0; J <= n; ++J) {
    const double lp = ln_pj(n, J);
    if (lp < -700.0) continue;
    const double p = std::exp(lp);
    const double x = std::log(2.0 * J + 1.0);
    mean.add(p * x);
    second.add(p * x * x);
  }
  return second.sum - mean.sum * mean.sum;
}

}  // namespace gibbsmix
