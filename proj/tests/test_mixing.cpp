// Copyright 2026 The gibbsmix Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "gibbsmix/asymptotics.hpp"
#include "gibbsmix/exact.hpp"
#include "gibbsmix/mixing.hpp"

using namespace gibbsmix;

namespace {

const double kPi = std::numbers::pi;
const double kLn2 = std::numbers::ln2;

HalfInt half(int twice) { return HalfInt::from_twice(twice); }

bool scenario_valid(unsigned n, unsigned m, unsigned d, Statistics s) {
  if (n + m == 0) return false;
  if (s == Statistics::Fermion && (n > d / 2 || m > d / 2)) return false;
  return true;
}

}  // namespace

TEST_SUITE("mixing") {
  TEST_CASE("scenario validation") {
    CHECK_NOTHROW(MixingScenario(1, 1, 2, Statistics::Boson));
    CHECK_THROWS_AS(MixingScenario(0, 0, 4, Statistics::Boson),
                    ScenarioError);
    CHECK_THROWS_AS(MixingScenario(1, 1, 3, Statistics::Boson),
                    ScenarioError);
    CHECK_THROWS_AS(MixingScenario(1, 1, 0, Statistics::Boson),
                    ScenarioError);
    CHECK_THROWS_AS(MixingScenario(3, 1, 4, Statistics::Fermion),
                    ScenarioError);
    CHECK_THROWS_AS(MixingScenario(1, 3, 4, Statistics::Fermion),
                    ScenarioError);
    CHECK_NOTHROW(MixingScenario(2, 2, 4, Statistics::Fermion));
  }

  TEST_CASE("single pair closed forms across cell counts") {
    for (unsigned d = 2; d <= 40; d += 2) {
      const double dd = d;
      const MixingScenario boson(1, 1, d, Statistics::Boson);
      const MixingScenario fermion(1, 1, d, Statistics::Fermion);

      CHECK(std::abs(delta_s_informed(boson) - 2 * kLn2) <= 1e-12);
      CHECK(std::abs(delta_s_informed(fermion) - 2 * kLn2) <= 1e-12);

      const double igno = 0.5 * std::log1p(-1.0 / (dd * dd)) + kLn2;
      CHECK(std::abs(delta_s_ignorant(boson) - igno) <= 1e-12);
      CHECK(std::abs(delta_s_ignorant(fermion) - igno) <= 1e-12);

      CHECK(std::abs(delta_s_identical(boson) -
                     (std::log1p(1.0 / dd) + kLn2)) <= 1e-12);
      CHECK(std::abs(delta_s_identical(fermion) -
                     (std::log1p(-1.0 / dd) + kLn2)) <= 1e-12);
    }
  }

  TEST_CASE("single pair statistics independence of the mean") {
    for (unsigned d = 2; d <= 100; d += 2) {
      const MixingScenario b(1, 1, d, Statistics::Boson);
      const MixingScenario f(1, 1, d, Statistics::Fermion);
      CHECK(std::abs(delta_s_ignorant(b) - delta_s_ignorant(f)) <= 1e-13);
    }
  }

  TEST_CASE("informed observer equals the classical distinguishable count") {
    for (unsigned d = 4; d <= 16; d += 4) {
      for (unsigned n = 0; n <= 4; ++n) {
        for (unsigned m = 0; m <= 4; ++m) {
          for (Statistics st : {Statistics::Boson, Statistics::Fermion}) {
            if (!scenario_valid(n, m, d, st)) continue;
            const MixingScenario s(n, m, d, st);
            const bool excl = st == Statistics::Fermion;
            CHECK(std::abs(delta_s_informed(s) -
                           classical_delta_s(s, true, excl)) <= 1e-12);
          }
        }
      }
    }
  }

  TEST_CASE("identical gases equal the classical indistinguishable count") {
    for (unsigned d = 4; d <= 16; d += 4) {
      for (unsigned n = 0; n <= 4; ++n) {
        for (unsigned m = 0; m <= 4; ++m) {
          for (Statistics st : {Statistics::Boson, Statistics::Fermion}) {
            if (!scenario_valid(n, m, d, st)) continue;
            const MixingScenario s(n, m, d, st);
            const bool excl = st == Statistics::Fermion;
            CHECK(std::abs(delta_s_identical(s) -
                           classical_delta_s(s, false, excl)) <= 1e-12);
          }
        }
      }
    }
  }

  TEST_CASE("classical exclusion requires room for every particle") {
    const MixingScenario s(2, 1, 4, Statistics::Boson);
    CHECK_NOTHROW(classical_delta_s(s, true, true));
    const MixingScenario crowded(3, 1, 4, Statistics::Boson);
    CHECK_THROWS_AS(classical_delta_s(crowded, true, true),
                    std::invalid_argument);
  }

  TEST_CASE("one-sided scenarios agree across observers") {
    // With the right side empty, knowing the species adds nothing.
    for (unsigned d = 2; d <= 12; d += 2) {
      for (unsigned n = 1; n <= 4; ++n) {
        for (Statistics st : {Statistics::Boson, Statistics::Fermion}) {
          if (!scenario_valid(n, 0, d, st)) continue;
          const MixingScenario s(n, 0, d, st);
          CHECK(std::abs(delta_s_informed(s) - delta_s_identical(s)) <=
                1e-13);
          CHECK(std::abs(delta_s_ignorant(s) - delta_s_identical(s)) <=
                1e-13);
          CHECK(work_variance(s) <= 1e-15);
        }
      }
    }
  }

  TEST_CASE("observer ordering across a scenario grid") {
    // Regression bounds observed on this grid, not theorems: the informed
    // observer never extracts less than the ignorant one, and every mean
    // entropy change is non-negative.
    for (unsigned d = 2; d <= 12; d += 2) {
      for (unsigned n = 0; n <= 6; ++n) {
        for (unsigned m = 0; m <= n; ++m) {
          for (Statistics st : {Statistics::Boson, Statistics::Fermion}) {
            if (!scenario_valid(n, m, d, st)) continue;
            const MixingScenario s(n, m, d, st);
            const double info = delta_s_informed(s);
            const double igno = delta_s_ignorant(s);
            const double iden = delta_s_identical(s);
            CHECK(igno >= -1e-12);
            CHECK(info >= igno - 1e-10);
            CHECK(info >= iden - 1e-12);
            CHECK(work_variance(s) >= 0.0);
          }
        }
      }
    }
  }

  TEST_CASE("two-cell bosons favor identical gases") {
    // At d = 2 the sector dimension 2J+1 grows with J, so concentrating
    // the weight at J = N/2 (identical gases) maximizes the mean.
    for (unsigned n = 1; n <= 20; ++n) {
      const MixingScenario s(n, n, 2, Statistics::Boson);
      CHECK(delta_s_identical(s) >= delta_s_ignorant(s) - 1e-12);
    }
  }

  TEST_CASE("moderate density gap approximates the sector entropy") {
    const MixingScenario s(4, 4, 40, Statistics::Boson);
    const double gap = delta_s_informed(s) - delta_s_ignorant(s);
    const double pred = low_density_gap_prediction(4, 40);
    CHECK(std::abs(gap - pred) / pred < 0.10);
  }

  TEST_CASE("single gas in two cells") {
    const MixingScenario s(1, 0, 2, Statistics::Boson);
    const MixingReport rep = mixing_report(s);
    CHECK(rep.delta_s_informed == doctest::Approx(kLn2).epsilon(1e-14));
    CHECK(rep.delta_s_ignorant == doctest::Approx(kLn2).epsilon(1e-14));
    CHECK(rep.delta_s_identical == doctest::Approx(kLn2).epsilon(1e-14));
    CHECK(rep.delta_s_classical_dist ==
          doctest::Approx(kLn2).epsilon(1e-14));
    CHECK(rep.delta_s_classical_indist ==
          doctest::Approx(kLn2).epsilon(1e-14));
    CHECK(rep.work_variance == 0.0);
  }

  TEST_CASE("sector average reconstructs the ignorant mean") {
    const unsigned cases[][3] = {{3, 2, 8}, {4, 4, 6}, {5, 1, 10}};
    for (const auto& c : cases) {
      const unsigned n = c[0], m = c[1], d = c[2];
      const MixingScenario s(n, m, d, Statistics::Boson);
      const auto dist = pj_orthogonal(n, m);
      double acc = 0;
      for (const auto& e : dist.entries) {
        acc += e.p.get_d() * per_sector_delta_s(s, e.J);
      }
      CHECK(delta_s_ignorant(s) == doctest::Approx(acc).epsilon(1e-13));
    }
  }

  TEST_CASE("per-sector lookup validates the sector") {
    const MixingScenario s(2, 1, 6, Statistics::Boson);
    CHECK_NOTHROW(per_sector_delta_s(s, half(3)));
    CHECK_THROWS_AS(per_sector_delta_s(s, half(2)), std::invalid_argument);
    CHECK_THROWS_AS(per_sector_delta_s(s, half(5)), std::invalid_argument);
  }

  TEST_CASE("equal sector dimensions give zero variance") {
    // (2,1) at d = 4: both sectors have dimension 20.
    const MixingScenario s(2, 1, 4, Statistics::Boson);
    CHECK(work_variance(s) == 0.0);
    CHECK(std::abs(delta_s_ignorant(s) - delta_s_identical(s)) <= 1e-15);
  }

  TEST_CASE("angle endpoints match the orthogonal and identical cases") {
    for (unsigned d : {2u, 4u, 8u, 12u}) {
      for (unsigned n = 0; n <= 6; ++n) {
        for (unsigned m = 0; m <= 6; ++m) {
          for (Statistics st : {Statistics::Boson, Statistics::Fermion}) {
            if (!scenario_valid(n, m, d, st)) continue;
            const MixingScenario s(n, m, d, st);
            CHECK(std::abs(delta_s_informed_partial(s, SpinAngle(kPi)) -
                           delta_s_informed(s)) <= 1e-12);
            CHECK(std::abs(delta_s_ignorant_partial(s, SpinAngle(kPi)) -
                           delta_s_ignorant(s)) <= 1e-12);
            CHECK(std::abs(delta_s_informed_partial(s, SpinAngle(0.0)) -
                           delta_s_identical(s)) <= 1e-12);
            CHECK(std::abs(delta_s_ignorant_partial(s, SpinAngle(0.0)) -
                           delta_s_identical(s)) <= 1e-12);
          }
        }
      }
    }
  }

  TEST_CASE("partial distinguishability interpolates monotonically") {
    const MixingScenario s(3, 3, 10, Statistics::Boson);
    double prev_info = -1, prev_igno = -1;
    for (double theta = 0.0; theta <= kPi + 1e-9; theta += kPi / 16) {
      const double info = delta_s_informed_partial(s, SpinAngle(std::min(theta, kPi)));
      const double igno = delta_s_ignorant_partial(s, SpinAngle(std::min(theta, kPi)));
      CHECK(info >= prev_info - 1e-12);
      CHECK(igno >= prev_igno - 1e-12);
      prev_info = info;
      prev_igno = igno;
    }
  }

  TEST_CASE("extractable work scales with temperature") {
    CHECK(extractable_work(1.5, Temperature{2.0}) == 3.0);
    CHECK(extractable_work(0.7, Temperature{}) == 0.7);
    CHECK_THROWS_AS(extractable_work(1.0, Temperature{0.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(extractable_work(1.0, Temperature{-1.0}),
                    std::invalid_argument);
  }

  TEST_CASE("report agrees with the standalone functions") {
    for (auto st : {Statistics::Boson, Statistics::Fermion}) {
      const MixingScenario s(2, 2, 8, st);
      const MixingReport rep = mixing_report(s);
      CHECK(std::abs(rep.delta_s_informed - delta_s_informed(s)) <= 1e-14);
      CHECK(std::abs(rep.delta_s_ignorant - delta_s_ignorant(s)) <= 1e-14);
      CHECK(std::abs(rep.delta_s_identical - delta_s_identical(s)) <= 1e-14);
      const bool excl = st == Statistics::Fermion;
      CHECK(std::abs(rep.delta_s_classical_dist -
                     classical_delta_s(s, true, excl)) <= 1e-14);
      CHECK(std::abs(rep.delta_s_classical_indist -
                     classical_delta_s(s, false, excl)) <= 1e-14);
      CHECK(std::abs(rep.work_variance - work_variance(s)) <= 1e-14);

      Rational psum(0);
      double mean = 0;
      for (const auto& row : rep.sectors) {
        psum += row.p;
        mean += row.p.get_d() * row.delta_s;
        CHECK(std::abs(row.delta_s - per_sector_delta_s(s, row.J)) <=
              1e-14);
      }
      psum.canonicalize();
      CHECK(psum == 1);
      CHECK(std::abs(mean - rep.delta_s_ignorant) <= 1e-12);
      CHECK(std::abs(rep.per_sector().at(half(4)) -
                     per_sector_delta_s(s, half(4))) <= 1e-14);

      std::vector<Rational> ps;
      for (const auto& e : rep.sector_distribution.entries) ps.push_back(e.p);
      CHECK(std::abs(rep.shannon_hp - shannon_entropy(ps)) <= 1e-14);
    }
  }

  TEST_CASE("angle report keeps the sector table consistent") {
    const MixingScenario s(3, 2, 10, Statistics::Boson);
    const MixingReport rep = mixing_report(s, SpinAngle(1.1));
    CHECK(std::abs(rep.delta_s_informed -
                   delta_s_informed_partial(s, SpinAngle(1.1))) <= 1e-15);
    CHECK(std::abs(rep.delta_s_ignorant -
                   delta_s_ignorant_partial(s, SpinAngle(1.1))) <= 1e-15);
    // The identical and classical columns carry no spin dependence.
    CHECK(std::abs(rep.delta_s_identical - delta_s_identical(s)) <= 1e-14);
    double psum = 0, mean = 0;
    for (const auto& row : rep.sectors) {
      psum += row.p.get_d();
      mean += row.p.get_d() * row.delta_s;
    }
    CHECK(psum == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(mean - rep.delta_s_ignorant) <= 1e-12);
  }

  TEST_CASE("initial entropy counts both boxes") {
    const MixingScenario s(2, 1, 8, Statistics::Boson);
    // ln C(5,2) + ln C(4,1)
    CHECK(initial_entropy(s) ==
          doctest::Approx(std::log(10.0) + std::log(4.0)).epsilon(1e-14));
    const MixingScenario f(2, 1, 8, Statistics::Fermion);
    // ln C(4,2) + ln C(4,1)
    CHECK(initial_entropy(f) ==
          doctest::Approx(std::log(6.0) + std::log(4.0)).epsilon(1e-14));
  }
}
