// Copyright 2026 The gibbsmix Authors
// SPDX-License-Identifier: Apache-2.0

#include "gibbsmix/dimensions.hpp"

namespace gibbsmix {

namespace {

// Shared validation for the closed-form sector dimensions.
void check_sector_args(unsigned N, unsigned d, HalfInt J) {
  if (d < 2) throw std::invalid_argument("sector dimension: d must be >= 2");
  if (N < 1) throw std::invalid_argument("sector dimension: N must be >= 1");
  if (J.twice() < 0 || J.twice() > static_cast<int>(N)) {
    throw std::invalid_argument("sector dimension: J outside [0, N/2]");
  }
  if ((static_cast<int>(N) - J.twice()) % 2 != 0) {
    throw std::invalid_argument("sector dimension: J parity mismatch with N/2");
  }
}

}  // namespace

BigInt dim_boson_sector(unsigned N, unsigned d, HalfInt J) {
  check_sector_args(N, d, J);
  const unsigned long lower = (N - J.twice()) / 2;  // N/2 - J
  const unsigned long upper = (N + J.twice()) / 2;  // N/2 + J
  BigInt num = (J.twice() + 1) * factorial(lower + d - 2);
  num *= factorial(upper + d - 1);
  BigInt den = factorial(lower) * factorial(upper + 1);
  den *= factorial(d - 1);
  den *= factorial(d - 2);
  BigInt out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

BigInt dim_fermion_sector(unsigned N, unsigned d, HalfInt J) {
  check_sector_args(N, d, J);
  const unsigned long lower = (N - J.twice()) / 2;
  const unsigned long upper = (N + J.twice()) / 2;
  if (upper > d) {
    throw SectorUnavailable(
        "dim_fermion_sector: transposed diagram has more rows than cells");
  }
  BigInt num = (J.twice() + 1) * factorial(d);
  num *= factorial(d + 1);
  BigInt den = factorial(upper + 1) * factorial(lower);
  den *= factorial(d - lower + 1);
  den *= factorial(d - upper);
  BigInt out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

BigInt dim_weyl_two_row(const YoungDiagramTwoRow& lambda, unsigned d,
                        bool transpose) {
  if (d < 1) throw std::invalid_argument("dim_weyl_two_row: d must be >= 1");

  // Parts of the evaluated diagram, padded with zeros to length d.
  std::vector<unsigned long> parts(d, 0);
  if (!transpose) {
    if (d < 2 && lambda.row2 > 0) {
      throw SectorUnavailable("dim_weyl_two_row: diagram has too many rows");
    }
    parts[0] = lambda.row1;
    if (d > 1) parts[1] = lambda.row2;
  } else {
    // Conjugate of a two-row diagram: row2 columns of height 2, then
    // row1 - row2 of height 1.
    if (lambda.row1 > d) {
      throw SectorUnavailable("dim_weyl_two_row: diagram has too many rows");
    }
    for (unsigned long i = 0; i < lambda.row2; ++i) parts[i] = 2;
    for (unsigned long i = lambda.row2; i < lambda.row1; ++i) parts[i] = 1;
  }

  BigInt num(1);
  for (unsigned i = 0; i < d; ++i) {
    for (unsigned j = i + 1; j < d; ++j) {
      // lt_i - lt_j with lt = parts + (d-1, d-2, ..., 0); always positive.
      const long diff = static_cast<long>(parts[i]) + (d - 1 - i) -
                        static_cast<long>(parts[j]) - (d - 1 - j);
      num *= diff;
    }
  }
  BigInt den(1);
  for (unsigned k = 1; k + 1 <= d; ++k) den *= factorial(k);
  BigInt out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

const BigInt* SectorDimensionTable::find(HalfInt J) const {
  for (const Entry& e : entries) {
    if (e.J == J) return &e.dim;
  }
  return nullptr;
}

SectorDimensionTable sector_dimensions(unsigned N, unsigned d, Statistics s) {
  SectorDimensionTable table;
  table.N = N;
  table.d = d;
  table.statistics = s;
  for (int tJ = static_cast<int>(N); tJ >= (N % 2 == 0 ? 0 : 1); tJ -= 2) {
    const HalfInt J = HalfInt::from_twice(tJ);
    if (s == Statistics::Fermion &&
        (N + tJ) / 2 > d) {
      continue;  // transposed diagram would not fit; sector absent
    }
    table.entries.push_back(
        {J, s == Statistics::Boson ? dim_boson_sector(N, d, J)
                                   : dim_fermion_sector(N, d, J)});
  }
  return table;
}

}  // namespace gibbsmix
