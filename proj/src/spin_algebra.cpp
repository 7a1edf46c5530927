// Copyright 2026 The gibbsmix Authors
// SPDX-License-Identifier: Apache-2.0

#include "gibbsmix/spin_algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace gibbsmix {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Racah's triangle factor Delta(j1 j2 J), exact.
Rational triangle_factor(int tj1, int tj2, int tJ) {
  const unsigned long a = static_cast<unsigned long>((tj1 + tj2 - tJ) / 2);
  const unsigned long b = static_cast<unsigned long>((tj1 - tj2 + tJ) / 2);
  const unsigned long c = static_cast<unsigned long>((-tj1 + tj2 + tJ) / 2);
  Rational delta(factorial(a) * factorial(b) * factorial(c),
                 factorial((tj1 + tj2 + tJ) / 2 + 1));
  delta.canonicalize();
  return delta;
}

}  // namespace

const Rational* SectorDistribution::find(HalfInt J) const {
  for (const Entry& e : entries) {
    if (e.J == J) return &e.p;
  }
  return nullptr;
}

SpinAngle::SpinAngle(double t) : theta(t) {
  if (!(t >= 0.0 && t <= 3.14159265358979323847)) {
    throw std::invalid_argument("SpinAngle: theta must lie in [0, pi]");
  }
}

SectorDistribution pj_orthogonal(unsigned n, unsigned m) {
  if (n + m == 0) throw std::invalid_argument("pj_orthogonal: empty system");
  const unsigned N = n + m;
  const int tJmin = static_cast<int>(n > m ? n - m : m - n);

  SectorDistribution dist;
  dist.N = N;
  const BigInt shared = factorial(n) * factorial(m);
  for (int tJ = static_cast<int>(N); tJ >= tJmin; tJ -= 2) {
    // N/2 + J and N/2 - J are integers by construction.
    const unsigned long upper = (N + tJ) / 2;
    const unsigned long lower = (N - tJ) / 2;
    Rational p((tJ + 1) * shared, factorial(upper + 1) * factorial(lower));
    p.canonicalize();
    dist.entries.push_back({HalfInt::from_twice(tJ), p});
  }
  return dist;
}

Rational cg_squared(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J,
                    HalfInt M) {
  require(j1.twice() >= 0 && j2.twice() >= 0 && J.twice() >= 0,
          "cg_squared: negative angular momentum");
  require(abs(m1) <= j1 && abs(m2) <= j2 && abs(M) <= J,
          "cg_squared: |m| exceeds j");
  require((j1.twice() - m1.twice()) % 2 == 0 &&
              (j2.twice() - m2.twice()) % 2 == 0 &&
              (J.twice() - M.twice()) % 2 == 0,
          "cg_squared: j and m parity mismatch");

  // Selection rules: zero coefficient, not an error.
  if (m1 + m2 != M) return Rational(0);
  if (J < abs(j1 - j2) || J > j1 + j2) return Rational(0);
  if ((j1.twice() + j2.twice() - J.twice()) % 2 != 0) return Rational(0);

  const int tj1 = j1.twice(), tm1 = m1.twice();
  const int tj2 = j2.twice(), tm2 = m2.twice();
  const int tJ = J.twice(), tM = M.twice();

  // Prefactor R: everything under Racah's square root. Exact rational.
  Rational prefactor = triangle_factor(tj1, tj2, tJ);
  prefactor *= tJ + 1;
  const long facs[6] = {
      (tJ + tM) / 2,   (tJ - tM) / 2,   (tj1 - tm1) / 2,
      (tj1 + tm1) / 2, (tj2 - tm2) / 2, (tj2 + tm2) / 2,
  };
  for (long f : facs) prefactor *= factorial(static_cast<unsigned long>(f));

  // Signed sum S over k; C = S sqrt(R), so C^2 = S^2 R exactly.
  const long k_hi_candidates[3] = {(tj1 + tj2 - tJ) / 2, (tj1 - tm1) / 2,
                                   (tj2 + tm2) / 2};
  const long k_lo_candidates[3] = {0, (tj2 - tJ - tm1) / 2,
                                   (tj1 - tJ + tm2) / 2};
  long k_lo = k_lo_candidates[0], k_hi = k_hi_candidates[0];
  for (long v : k_lo_candidates) k_lo = std::max(k_lo, v);
  for (long v : k_hi_candidates) k_hi = std::min(k_hi, v);

  Rational sum(0);
  for (long k = k_lo; k <= k_hi; ++k) {
    BigInt denom = factorial(static_cast<unsigned long>(k));
    denom *= factorial(static_cast<unsigned long>((tj1 + tj2 - tJ) / 2 - k));
    denom *= factorial(static_cast<unsigned long>((tj1 - tm1) / 2 - k));
    denom *= factorial(static_cast<unsigned long>((tj2 + tm2) / 2 - k));
    denom *= factorial(static_cast<unsigned long>((tJ - tj2 + tm1) / 2 + k));
    denom *= factorial(static_cast<unsigned long>((tJ - tj1 - tm2) / 2 + k));
    Rational term(k % 2 == 0 ? 1 : -1, denom);
    term.canonicalize();
    sum += term;
  }

  Rational result = sum * sum * prefactor;
  result.canonicalize();
  return result;
}

std::map<HalfInt, double> qm_distribution(unsigned n, unsigned m,
                                          SpinAngle theta) {
  if (n + m == 0) throw std::invalid_argument("qm_distribution: empty system");
  const unsigned N = n + m;
  // cos^2 and sin^2 are kept separate rather than via 1-x so that the
  // theta = pi endpoint concentrates numerically on the maximal-k term.
  const double c2 = std::cos(theta.theta / 2) * std::cos(theta.theta / 2);
  const double s2 = std::sin(theta.theta / 2) * std::sin(theta.theta / 2);

  std::map<HalfInt, double> q;
  // k = N/2 - M counts right-side spins flipped into the down component;
  // it ranges over 0..m, i.e. M from N/2 down to (n-m)/2.
  for (unsigned k = 0; k <= m; ++k) {
    const int tM = static_cast<int>(N) - 2 * static_cast<int>(k);
    const double weight = binomial(m, static_cast<long>(k)).get_d();
    q[HalfInt::from_twice(tM)] =
        weight * std::pow(c2, static_cast<double>(m - k)) *
        std::pow(s2, static_cast<double>(k));
  }
  return q;
}

std::map<HalfInt, double> pj_partial(unsigned n, unsigned m, SpinAngle theta) {
  const auto q = qm_distribution(n, m, theta);
  const unsigned N = n + m;
  const HalfInt jn = HalfInt::from_twice(static_cast<int>(n));
  const HalfInt jm = HalfInt::from_twice(static_cast<int>(m));
  const int tJmin = static_cast<int>(n > m ? n - m : m - n);

  std::map<HalfInt, double> p;
  for (int tJ = static_cast<int>(N); tJ >= tJmin; tJ -= 2) {
    const HalfInt J = HalfInt::from_twice(tJ);
    double acc = 0.0;
    for (const auto& [M, qM] : q) {
      const HalfInt m2 = M - jn;  // z-component carried by the right gas
      if (abs(m2) > jm || abs(M) > J) continue;
      acc += qM * cg_squared(jn, jn, jm, m2, J, M).get_d();
    }
    p[J] = acc;
  }
  return p;
}

}  // namespace gibbsmix
