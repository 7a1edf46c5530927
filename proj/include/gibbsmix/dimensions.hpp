// Copyright 2026 The gibbsmix Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file dimensions.hpp
 * @brief Exact spatial sector dimensions d_J for bosons and fermions, plus
 *        the general two-row Weyl dimension formula as an independent
 *        cross-check path.
 *
 * Under Schur-Weyl duality the N-particle space splits into blocks labelled
 * by the total spin J; the spatial factor of block J has dimension d_J
 * depending on the cell count d and the statistics. Bosons pair the spin-J
 * block with the two-row diagram (N/2+J, N/2-J); fermions with its
 * transpose.
 */

#ifndef GIBBSMIX_DIMENSIONS_HPP
#define GIBBSMIX_DIMENSIONS_HPP

#include <stdexcept>
#include <vector>

#include "gibbsmix/exact.hpp"
#include "gibbsmix/half_int.hpp"

namespace gibbsmix {

enum class Statistics { Boson, Fermion };

/// Thrown when a fermionic sector does not exist (transposed diagram needs
/// more rows than the d cells provide). Callers weighting sectors must never
/// swallow this: every sector with p_J > 0 exists for valid scenarios, so
/// seeing it signals a caller bug.
struct SectorUnavailable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Two-row Young diagram lambda = (row1, row2), row1 >= row2, N = row1+row2
/// boxes. Sector J corresponds to (N/2+J, N/2-J).
struct YoungDiagramTwoRow {
  unsigned long row1;
  unsigned long row2;
  YoungDiagramTwoRow(unsigned long r1, unsigned long r2) : row1(r1), row2(r2) {
    if (r2 > r1) {
      throw std::invalid_argument("YoungDiagramTwoRow: row1 must be >= row2");
    }
  }
};

/// Bosonic spatial sector dimension, exact:
///   d_J^B = (2J+1) (N/2-J+d-2)! (N/2+J+d-1)!
///           / [(N/2-J)! (N/2+J+1)! (d-1)! (d-2)!]
/// Requires d >= 2, 0 <= J <= N/2, and J of the same parity as N/2.
BigInt dim_boson_sector(unsigned N, unsigned d, HalfInt J);

/// Fermionic spatial sector dimension, exact:
///   d_J^F = (2J+1) d! (d+1)!
///           / [(N/2+J+1)! (N/2-J)! (d-N/2+J+1)! (d-N/2-J)!]
/// Exists only when N/2+J <= d; otherwise throws SectorUnavailable.
BigInt dim_fermion_sector(unsigned N, unsigned d, HalfInt J);

/// General two-row Weyl dimension: with padded parts lt = lambda + (d-1,
/// d-2, ..., 0), dim = prod_{i<j} (lt_i - lt_j) / prod_{k=1}^{d-1} k!.
/// transpose=true evaluates the conjugate diagram (2^row2, 1^(row1-row2)),
/// which must fit into d rows (row1 <= d) or SectorUnavailable is thrown.
BigInt dim_weyl_two_row(const YoungDiagramTwoRow& lambda, unsigned d,
                        bool transpose);

/// All existing sectors of an (N, d, statistics) system, J descending from
/// N/2. Fermionic J with N/2+J > d are omitted.
struct SectorDimensionTable {
  struct Entry {
    HalfInt J;
    BigInt dim;
  };
  std::vector<Entry> entries;
  unsigned N = 0;
  unsigned d = 0;
  Statistics statistics = Statistics::Boson;

  const BigInt* find(HalfInt J) const;
};

SectorDimensionTable sector_dimensions(unsigned N, unsigned d, Statistics s);

}  // namespace gibbsmix

#endif  // GIBBSMIX_DIMENSIONS_HPP
