// Copyright 2026 The gibbsmix Authors
// SPDX-License-Identifier: Apache-2.0

#include "gibbsmix/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <vector>

namespace gibbsmix {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

std::vector<std::vector<unsigned>> all_permutations(unsigned N) {
  std::vector<unsigned> p(N);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<std::vector<unsigned>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

unsigned cycle_count(const std::vector<unsigned>& p) {
  std::vector<bool> seen(p.size(), false);
  unsigned cycles = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true;
  }
  return cycles;
}

// Parity from the cycle type: each k-cycle contributes k-1 transpositions.
bool is_odd_permutation(const std::vector<unsigned>& p) {
  return ((p.size() - cycle_count(p)) % 2) != 0;
}

// s^{-1} followed by t, as a permutation in the same one-line convention.
std::vector<unsigned> inverse_then(const std::vector<unsigned>& s,
                                   const std::vector<unsigned>& t) {
  std::vector<unsigned> sinv(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) sinv[s[i]] = (unsigned)i;
  std::vector<unsigned> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = sinv[t[i]];
  return out;
}

// Digit shuffler for product-space indices. Particle i owns the digit with
// place value base^(N-1-i); a permutation moves particle i's digit to slot
// perm[i], which realizes P_s P_t = P_{st} on the index space.
struct IndexPermuter {
  unsigned N;
  std::size_t base;
  std::vector<std::size_t> place;

  IndexPermuter(unsigned n, std::size_t b) : N(n), base(b), place(n) {
    std::size_t v = 1;
    for (unsigned i = n; i-- > 0;) {
      place[i] = v;
      v *= b;
    }
  }

  std::size_t total() const { return N == 0 ? 1 : place[0] * base; }

  std::size_t apply(const std::vector<unsigned>& perm, std::size_t idx) const {
    std::size_t out = 0;
    for (unsigned i = 0; i < N; ++i) {
      std::size_t digit = (idx / place[i]) % base;
      out += digit * place[perm[i]];
    }
    return out;
  }
};

std::size_t checked_full_dimension(unsigned N, unsigned d, std::size_t cap) {
  std::size_t dim = 1;
  for (unsigned i = 0; i < N; ++i) {
    if (dim > cap / (2 * (std::size_t)d) + 1) {
      dim = cap + 1;
      break;
    }
    dim *= 2 * (std::size_t)d;
  }
  if (dim > cap) {
    throw CapExceeded("full Hilbert space dimension (2d)^N exceeds the cap");
  }
  return dim;
}

void check_layout(const DenseOperator& rho, bool want_spin) {
  if (rho.includes_spin != want_spin) {
    throw std::invalid_argument(want_spin
                                    ? "operator must include spin factors"
                                    : "operator must be spatial only");
  }
  std::size_t base = (want_spin ? 2u : 1u) * (std::size_t)rho.cells;
  std::size_t dim = 1;
  for (unsigned i = 0; i < rho.num_particles; ++i) dim *= base;
  if ((std::size_t)rho.mat.rows() != dim ||
      (std::size_t)rho.mat.cols() != dim) {
    throw std::invalid_argument("operator size disagrees with its layout");
  }
}

void enumerate_rec(unsigned cells, unsigned k, bool exclusion,
                   std::vector<unsigned>& cur,
                   std::vector<std::vector<unsigned>>& out) {
  if (cur.size() == cells) {
    if (k == 0) out.push_back(cur);
    return;
  }
  unsigned top = exclusion ? std::min(k, 1u) : k;
  for (unsigned c = 0; c <= top; ++c) {
    cur.push_back(c);
    enumerate_rec(cells, k - c, exclusion, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<unsigned>> enumerate_occupations(unsigned cells,
                                                         unsigned k,
                                                         bool exclusion) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  cur.reserve(cells);
  enumerate_rec(cells, k, exclusion, cur, out);
  return out;
}

DenseOperator symmetrized_state(const Configuration& c, SpinAngle theta,
                                Statistics statistics, unsigned d,
                                std::size_t cap) {
  if (d < 2 || d % 2 != 0) {
    throw std::invalid_argument("cell count d must be even and at least 2");
  }
  unsigned half = d / 2;
  if (c.left.size() != half || c.right.size() != half) {
    throw std::invalid_argument("configuration must list d/2 cells per side");
  }
  unsigned n = std::accumulate(c.left.begin(), c.left.end(), 0u);
  unsigned m = std::accumulate(c.right.begin(), c.right.end(), 0u);
  unsigned N = n + m;
  if (N == 0) throw std::invalid_argument("configuration holds no particles");
  if (statistics == Statistics::Fermion) {
    for (unsigned occ : c.left) {
      if (occ > 1) {
        throw std::invalid_argument(
            "fermionic configuration occupies a cell twice");
      }
    }
    for (unsigned occ : c.right) {
      if (occ > 1) {
        throw std::invalid_argument(
            "fermionic configuration occupies a cell twice");
      }
    }
  }
  std::size_t dim = checked_full_dimension(N, d, cap);

  // Single-particle amplitudes over the 2d joint (cell,spin) levels. Left
  // particles are spin up; right particles carry the tilted spin state.
  double up = std::cos(theta.theta / 2.0);
  double dn = std::sin(theta.theta / 2.0);
  struct Level {
    std::size_t u_up;
    double a_up;
    double a_dn;
  };
  std::vector<Level> particles;
  particles.reserve(N);
  for (unsigned cell = 0; cell < half; ++cell) {
    for (unsigned r = 0; r < c.left[cell]; ++r) {
      particles.push_back({2 * (std::size_t)cell, 1.0, 0.0});
    }
  }
  for (unsigned cell = 0; cell < half; ++cell) {
    for (unsigned r = 0; r < c.right[cell]; ++r) {
      particles.push_back({2 * (std::size_t)(half + cell), up, dn});
    }
  }

  VectorXcd prod = VectorXcd::Ones(1);
  for (const Level& lv : particles) {
    VectorXcd next = VectorXcd::Zero(prod.size() * 2 * d);
    for (Eigen::Index a = 0; a < prod.size(); ++a) {
      if (prod[a] == std::complex<double>(0.0, 0.0)) continue;
      std::size_t row = (std::size_t)a * 2 * d;
      next[(Eigen::Index)(row + lv.u_up)] += prod[a] * lv.a_up;
      if (lv.a_dn != 0.0) {
        next[(Eigen::Index)(row + lv.u_up + 1)] += prod[a] * lv.a_dn;
      }
    }
    prod = std::move(next);
  }

  IndexPermuter idx(N, 2 * (std::size_t)d);
  VectorXcd sym = VectorXcd::Zero((Eigen::Index)dim);
  for (const auto& perm : all_permutations(N)) {
    double sign =
        (statistics == Statistics::Fermion && is_odd_permutation(perm)) ? -1.0
                                                                        : 1.0;
    for (std::size_t a = 0; a < dim; ++a) {
      if (prod[(Eigen::Index)a] == std::complex<double>(0.0, 0.0)) continue;
      sym[(Eigen::Index)idx.apply(perm, a)] += sign * prod[(Eigen::Index)a];
    }
  }
  double norm = sym.norm();
  if (norm < 1e-9) {
    throw std::invalid_argument("configuration is annihilated by projection");
  }
  sym /= norm;

  DenseOperator out;
  out.mat = sym * sym.adjoint();
  out.num_particles = N;
  out.cells = d;
  out.includes_spin = true;
  return out;
}

DenseOperator initial_thermal_state(unsigned n, unsigned m, unsigned d,
                                    SpinAngle theta, Statistics statistics,
                                    std::size_t cap) {
  if (d < 2 || d % 2 != 0) {
    throw std::invalid_argument("cell count d must be even and at least 2");
  }
  unsigned N = n + m;
  if (N == 0) throw std::invalid_argument("need at least one particle");
  bool exclusion = statistics == Statistics::Fermion;
  if (exclusion && (n > d / 2 || m > d / 2)) {
    throw std::invalid_argument("side population exceeds fermionic capacity");
  }
  std::size_t dim = checked_full_dimension(N, d, cap);

  auto lefts = enumerate_occupations(d / 2, n, exclusion);
  auto rights = enumerate_occupations(d / 2, m, exclusion);
  double weight = 1.0 / ((double)lefts.size() * (double)rights.size());

  DenseOperator out;
  out.mat = MatrixXcd::Zero((Eigen::Index)dim, (Eigen::Index)dim);
  out.num_particles = N;
  out.cells = d;
  out.includes_spin = true;
  for (const auto& l : lefts) {
    for (const auto& r : rights) {
      Configuration conf{l, r};
      out.mat += weight * symmetrized_state(conf, theta, statistics, d, cap).mat;
    }
  }
  return out;
}

DenseOperator spin_partial_trace(const DenseOperator& rho) {
  check_layout(rho, true);
  unsigned N = rho.num_particles;
  unsigned d = rho.cells;
  IndexPermuter spatial(N, d), spin(N, 2), full(N, 2 * (std::size_t)d);
  std::size_t dx = spatial.total();
  std::size_t ds = spin.total();

  // Offset of (x, s) in the joint layout: particle i's joint level is
  // 2*cell_i + spin_i, so the index splits into a spatial part and a spin
  // part that add.
  std::vector<std::size_t> xoff(dx), soff(ds);
  for (std::size_t x = 0; x < dx; ++x) {
    std::size_t off = 0;
    for (unsigned i = 0; i < N; ++i) {
      std::size_t digit = (x / spatial.place[i]) % d;
      off += 2 * digit * full.place[i];
    }
    xoff[x] = off;
  }
  for (std::size_t s = 0; s < ds; ++s) {
    std::size_t off = 0;
    for (unsigned i = 0; i < N; ++i) {
      std::size_t bit = (s / spin.place[i]) % 2;
      off += bit * full.place[i];
    }
    soff[s] = off;
  }

  DenseOperator out;
  out.mat = MatrixXcd::Zero((Eigen::Index)dx, (Eigen::Index)dx);
  out.num_particles = N;
  out.cells = d;
  out.includes_spin = false;
  for (std::size_t x = 0; x < dx; ++x) {
    for (std::size_t y = 0; y < dx; ++y) {
      std::complex<double> acc(0.0, 0.0);
      for (std::size_t s = 0; s < ds; ++s) {
        acc += rho.mat((Eigen::Index)(xoff[x] + soff[s]),
                       (Eigen::Index)(xoff[y] + soff[s]));
      }
      out.mat((Eigen::Index)x, (Eigen::Index)y) = acc;
    }
  }
  return out;
}

std::map<HalfInt, Eigen::MatrixXd> total_spin_projectors(unsigned N) {
  if (N == 0) throw std::invalid_argument("need at least one spin");
  std::size_t dim = (std::size_t)1 << N;
  MatrixXd casimir = MatrixXd::Zero((Eigen::Index)dim, (Eigen::Index)dim);
  // S^2 = sum_{i<j} SWAP_ij + N(4-N)/4 on N spin-1/2 factors.
  for (unsigned i = 0; i < N; ++i) {
    for (unsigned j = i + 1; j < N; ++j) {
      std::size_t mi = (std::size_t)1 << (N - 1 - i);
      std::size_t mj = (std::size_t)1 << (N - 1 - j);
      for (std::size_t s = 0; s < dim; ++s) {
        bool bi = (s & mi) != 0, bj = (s & mj) != 0;
        std::size_t t = (bi == bj) ? s : (s ^ (mi | mj));
        casimir((Eigen::Index)t, (Eigen::Index)s) += 1.0;
      }
    }
  }
  casimir += (N * (4.0 - (double)N) / 4.0) *
             MatrixXd::Identity((Eigen::Index)dim, (Eigen::Index)dim);

  Eigen::SelfAdjointEigenSolver<MatrixXd> es(casimir);
  std::map<HalfInt, Eigen::MatrixXd> projectors;
  for (Eigen::Index k = 0; k < (Eigen::Index)dim; ++k) {
    double lambda = es.eigenvalues()[k];
    int found = -1;
    for (int tj = (int)N; tj >= 0; tj -= 2) {
      double want = tj * (tj + 2) / 4.0;
      if (std::abs(lambda - want) < 1e-8) {
        found = tj;
        break;
      }
    }
    if (found < 0) {
      throw std::logic_error("Casimir eigenvalue is not of the J(J+1) form");
    }
    HalfInt J = HalfInt::from_twice(found);
    auto it = projectors.find(J);
    if (it == projectors.end()) {
      it = projectors
               .emplace(J, MatrixXd::Zero((Eigen::Index)dim, (Eigen::Index)dim))
               .first;
    }
    it->second += es.eigenvectors().col(k) * es.eigenvectors().col(k).transpose();
  }
  return projectors;
}

std::map<HalfInt, double> sector_probabilities(const DenseOperator& rho,
                                               unsigned N, unsigned d) {
  check_layout(rho, true);
  if (rho.num_particles != N || rho.cells != d) {
    throw std::invalid_argument("operator metadata disagrees with arguments");
  }
  auto projectors = total_spin_projectors(N);
  IndexPermuter spatial(N, d), spin(N, 2), full(N, 2 * (std::size_t)d);
  std::size_t dx = spatial.total();
  std::size_t ds = spin.total();
  std::vector<std::size_t> xoff(dx), soff(ds);
  for (std::size_t x = 0; x < dx; ++x) {
    std::size_t off = 0;
    for (unsigned i = 0; i < N; ++i) {
      off += 2 * ((x / spatial.place[i]) % d) * full.place[i];
    }
    xoff[x] = off;
  }
  for (std::size_t s = 0; s < ds; ++s) {
    std::size_t off = 0;
    for (unsigned i = 0; i < N; ++i) {
      off += ((s / spin.place[i]) % 2) * full.place[i];
    }
    soff[s] = off;
  }

  std::map<HalfInt, double> out;
  for (const auto& [J, proj] : projectors) {
    // tr[rho (I x P_J)] = sum_{x,s,s'} rho[(x,s),(x,s')] P_J[s',s]
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t x = 0; x < dx; ++x) {
      for (std::size_t s = 0; s < ds; ++s) {
        for (std::size_t sp = 0; sp < ds; ++sp) {
          double pj = proj((Eigen::Index)sp, (Eigen::Index)s);
          if (pj == 0.0) continue;
          acc += rho.mat((Eigen::Index)(xoff[x] + soff[s]),
                         (Eigen::Index)(xoff[x] + soff[sp])) *
                 pj;
        }
      }
    }
    out[J] = acc.real();
  }
  return out;
}

std::map<HalfInt, long> sector_dimensions_bruteforce(unsigned N, unsigned d,
                                                     Statistics statistics,
                                                     std::size_t cap) {
  if (N == 0) throw std::invalid_argument("need at least one particle");
  if (d < 2) throw std::invalid_argument("need at least two cells");
  checked_full_dimension(N, d, cap);

  auto projectors = total_spin_projectors(N);
  auto perms = all_permutations(N);
  IndexPermuter spin(N, 2);
  std::size_t ds = spin.total();
  double nfact = 1.0;
  for (unsigned i = 2; i <= N; ++i) nfact *= i;

  // dim_J (2J+1) = tr[P_phys (I x P_J)]; the physical projector is the
  // signed average of permutation operators and each term factorizes into
  // d^cycles on cells times a permuted trace on spins.
  std::map<HalfInt, long> out;
  for (const auto& [J, proj] : projectors) {
    double total = 0.0;
    for (const auto& perm : perms) {
      double sign =
          (statistics == Statistics::Fermion && is_odd_permutation(perm))
              ? -1.0
              : 1.0;
      double spatial = std::pow((double)d, (double)cycle_count(perm));
      double spintrace = 0.0;
      for (std::size_t s = 0; s < ds; ++s) {
        spintrace +=
            proj((Eigen::Index)s, (Eigen::Index)spin.apply(perm, s));
      }
      total += sign * spatial * spintrace;
    }
    total /= nfact;
    double mult = total / (double)(J.twice() + 1);
    long rounded = (long)std::llround(mult);
    if (std::abs(mult - (double)rounded) > 1e-6) {
      throw std::logic_error("sector count failed to come out an integer");
    }
    if (rounded < 0) {
      throw std::logic_error("sector count came out negative");
    }
    if (rounded > 0) out[J] = rounded;
  }
  return out;
}

DenseOperator twirl_spatial(const DenseOperator& rho_x, unsigned N,
                            unsigned d) {
  check_layout(rho_x, false);
  if (rho_x.num_particles != N || rho_x.cells != d) {
    throw std::invalid_argument("operator metadata disagrees with arguments");
  }
  auto perms = all_permutations(N);
  std::size_t P = perms.size();
  IndexPermuter idx(N, d);
  std::size_t dim = idx.total();

  // Orthogonal projection onto span{P_s}: Gram system G c = t with
  // G_{st} = tr(P_s^dag P_t) = d^cycles(s^{-1} t) and t_s = tr(P_s^dag rho).
  MatrixXcd gram((Eigen::Index)P, (Eigen::Index)P);
  for (std::size_t a = 0; a < P; ++a) {
    for (std::size_t b = 0; b < P; ++b) {
      auto rel = inverse_then(perms[a], perms[b]);
      gram((Eigen::Index)a, (Eigen::Index)b) =
          std::pow((double)d, (double)cycle_count(rel));
    }
  }
  VectorXcd t((Eigen::Index)P);
  for (std::size_t a = 0; a < P; ++a) {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t x = 0; x < dim; ++x) {
      acc += rho_x.mat((Eigen::Index)idx.apply(perms[a], x), (Eigen::Index)x);
    }
    t[(Eigen::Index)a] = acc;
  }
  // The Gram matrix is singular when d < N; the least-norm solution picks
  // the same projected operator.
  Eigen::CompleteOrthogonalDecomposition<MatrixXcd> cod(gram);
  VectorXcd coef = cod.solve(t);

  DenseOperator out;
  out.mat = MatrixXcd::Zero((Eigen::Index)dim, (Eigen::Index)dim);
  out.num_particles = N;
  out.cells = d;
  out.includes_spin = false;
  for (std::size_t a = 0; a < P; ++a) {
    std::complex<double> c = coef[(Eigen::Index)a];
    if (c == std::complex<double>(0.0, 0.0)) continue;
    for (std::size_t x = 0; x < dim; ++x) {
      out.mat((Eigen::Index)idx.apply(perms[a], x), (Eigen::Index)x) += c;
    }
  }
  out.mat = 0.5 * (out.mat + out.mat.adjoint()).eval();
  return out;
}

double von_neumann_entropy(const DenseOperator& rho) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(rho.mat,
                                              Eigen::EigenvaluesOnly);
  double acc = 0.0;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    double lambda = es.eigenvalues()[k];
    if (lambda < -1e-10) {
      throw std::invalid_argument("operator has a clearly negative eigenvalue");
    }
    if (lambda <= 0.0) continue;
    acc -= lambda * std::log(lambda);
  }
  return acc;
}

double oracle_delta_s_ignorant(unsigned n, unsigned m, unsigned d,
                               SpinAngle theta, Statistics statistics,
                               std::size_t cap) {
  DenseOperator full = initial_thermal_state(n, m, d, theta, statistics, cap);
  DenseOperator rho_x = spin_partial_trace(full);
  double before = von_neumann_entropy(rho_x);
  DenseOperator mixed = twirl_spatial(rho_x, n + m, d);
  double after = von_neumann_entropy(mixed);
  return after - before;
}

}  // namespace gibbsmix
