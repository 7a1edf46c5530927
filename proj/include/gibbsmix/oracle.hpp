// Copyright 2026 The gibbsmix Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file oracle.hpp
 * @brief First-quantization brute-force verifier.
 *
 * Builds explicit (anti)symmetrized N-particle states on the joint
 * (cell x spin)^N space, extracts sector probabilities and dimensions, and
 * evaluates the ignorant observer's entropy change as an entropy difference
 * of dense density matrices. Everything here is independent of the
 * closed-form modules it checks: total-spin structure comes from the
 * pairwise-swap Casimir, sector dimensions from counting inside the
 * projected physical subspace, and the thermalization map from an exact
 * projection onto the permutation-operator algebra.
 *
 * Costs are exponential by design; the size cap on (2d)^N keeps them small.
 */

#ifndef GIBBSMIX_ORACLE_HPP
#define GIBBSMIX_ORACLE_HPP

#include <Eigen/Dense>

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "gibbsmix/dimensions.hpp"
#include "gibbsmix/half_int.hpp"
#include "gibbsmix/spin_algebra.hpp"

namespace gibbsmix {

/// Thrown when a requested computation would exceed the size cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Default bound on the full-space dimension (2d)^N.
inline constexpr std::size_t kDefaultSizeCap = 1500;

/// Dense complex operator with its layout metadata. includes_spin
/// distinguishes the full (cell x spin)^N layout (dimension (2d)^N) from
/// the spatial cells^N layout (dimension d^N).
struct DenseOperator {
  Eigen::MatrixXcd mat;
  unsigned num_particles = 0;
  unsigned cells = 0;
  bool includes_spin = true;
};

/// Initial occupation pattern: left[i] particles in left cell i (spin up),
/// right[i] in right cell i (spin at the scenario angle). Vectors have d/2
/// entries each. Fermionic configurations must be 0/1.
struct Configuration {
  std::vector<unsigned> left;
  std::vector<unsigned> right;
};

/// Normalized (anti)symmetrized pure state for one configuration, returned
/// as a projector on the full (cell x spin)^N space. The right-side spin
/// state is cos(theta/2)|up> + sin(theta/2)|down>.
DenseOperator symmetrized_state(const Configuration& c, SpinAngle theta,
                                Statistics statistics, unsigned d,
                                std::size_t cap = kDefaultSizeCap);

/// Uniform mixture of symmetrized_state over every configuration with n
/// particles on the left and m on the right.
DenseOperator initial_thermal_state(unsigned n, unsigned m, unsigned d,
                                    SpinAngle theta, Statistics statistics,
                                    std::size_t cap = kDefaultSizeCap);

/// Traces out all N spin factors: (2d)^N layout in, d^N layout out.
DenseOperator spin_partial_trace(const DenseOperator& rho);

/// Eigenprojectors of the total-spin Casimir S^2 on (C^2)^N, keyed by J
/// with eigenvalue J(J+1). Built from pairwise swaps; eigenvalues snapped
/// to the nearest J(J+1) within 1e-8. Projectors sum to the identity.
std::map<HalfInt, Eigen::MatrixXd> total_spin_projectors(unsigned N);

/// tr[rho (I_cells x P_J)] for each J.
std::map<HalfInt, double> sector_probabilities(const DenseOperator& rho,
                                               unsigned N, unsigned d);

/// Spatial sector dimensions obtained by projecting the full space onto the
/// physical (anti)symmetric subspace and counting the S^2 multiplicities
/// inside it: dim_J = tr[P_phys (I x P_J)] / (2J+1). The trace expands over
/// the N! permutations, so no (2d)^N matrix is materialized. Sectors of
/// dimension zero are omitted. A non-integer count throws std::logic_error.
std::map<HalfInt, long> sector_dimensions_bruteforce(
    unsigned N, unsigned d, Statistics statistics,
    std::size_t cap = kDefaultSizeCap);

/// Haar average over identical single-cell unitaries, computed exactly as
/// the Hilbert-Schmidt orthogonal projection onto the span of the N!
/// permutation operators (the commutant): solve the Gram system
/// G c = t, G_{st} = d^cycles(s^-1 t), t_s = tr(P_s^dag rho), and return
/// sum_s c_s P_s. Rank deficiency at d < N is handled by the least-norm
/// pseudo-solution.
DenseOperator twirl_spatial(const DenseOperator& rho_x, unsigned N,
                            unsigned d);

/// -sum_i lambda_i ln lambda_i over the eigenvalues. Eigenvalues in
/// [-1e-10, 0) are clipped to zero; anything lower throws
/// std::invalid_argument.
double von_neumann_entropy(const DenseOperator& rho);

/// End-to-end reference value: S(twirl(tr_s rho)) - S(tr_s rho) for the
/// initial thermal state.
double oracle_delta_s_ignorant(unsigned n, unsigned m, unsigned d,
                               SpinAngle theta, Statistics statistics,
                               std::size_t cap = kDefaultSizeCap);

/// All configurations of k particles over `cells` cells (0/1 occupations
/// for exclusion=true). Shared between the thermal mixture and tests.
std::vector<std::vector<unsigned>> enumerate_occupations(unsigned cells,
                                                         unsigned k,
                                                         bool exclusion);

}  // namespace gibbsmix

#endif  // GIBBSMIX_ORACLE_HPP
