// Copyright 2026 The fermitangle Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock.hpp
 * @brief Pure states of N identical fermions in d single-particle modes.
 *
 * States live in the antisymmetric subspace and are stored as amplitude
 * vectors over Slater determinants. Basis states are strictly increasing mode
 * tuples ranked in lexicographic order, so for d=4, N=2 the layout is
 * {0,1},{0,2},{0,3},{1,2},{1,3},{2,3}. A Slater determinant {i<j<...} is the
 * normalized antisymmetrization of |i>|j>... taken in increasing mode order.
 */

#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "fermitangle/types.hpp"

namespace fermitangle::fock {

/// Tolerance on the unit norm of states and product factors.
inline constexpr double kNormTolerance = 1e-12;
/// Projection norm below which a product is treated as Pauli-forbidden.
inline constexpr double kDependenceCutoff = 1e-10;
/// Tolerance on U†U = 1 for single-particle transforms.
inline constexpr double kUnitaryTolerance = 1e-10;
/// Amplitude above which a same-site pair blocks the freeze map.
inline constexpr double kDoubleOccupancyCutoff = 1e-10;

/// Binomial coefficient C(n, k); zero when k is outside [0, n].
std::uint64_t binomial(int n, int k);

/// A single occupied mode, 0 <= value < d.
class ModeIndex {
 public:
  ModeIndex(int value, int modes);
  int value() const noexcept { return value_; }

 private:
  int value_;
};

/// Occupied modes of one Slater determinant, strictly increasing.
class SlaterBasisState {
 public:
  SlaterBasisState(std::vector<int> modes, int d);

  std::span<const int> modes() const noexcept { return modes_; }
  int particles() const noexcept { return static_cast<int>(modes_.size()); }
  int single_particle_dim() const noexcept { return d_; }

 private:
  std::vector<int> modes_;
  int d_;
};

/// Lexicographic rank of a strictly increasing mode tuple among all C(d,N).
std::size_t rank_subset(std::span<const int> modes, int d);
std::size_t rank_subset(const SlaterBasisState& state);

/// Inverse of rank_subset.
std::vector<int> unrank_subset(std::size_t rank, int d, int n);

/// Calls visit(rank, modes) for every N-subset of d modes in rank order.
template <typename Visitor>
void for_each_subset(int d, int n, Visitor&& visit) {
  std::vector<int> modes(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) modes[i] = i;
  std::size_t rank = 0;
  while (true) {
    visit(rank++, std::span<const int>(modes));
    int i = n - 1;
    while (i >= 0 && modes[i] == d - n + i) --i;
    if (i < 0) break;
    ++modes[i];
    for (int j = i + 1; j < n; ++j) modes[j] = modes[j - 1] + 1;
  }
}

class FermionState {
 public:
  /// Takes ownership of amplitudes; throws unless the vector has length
  /// C(d,N) and unit norm within kNormTolerance.
  FermionState(int d, int n, CVector amplitudes);

  /// Rescales amplitudes to unit norm before validating.
  static FermionState normalized(int d, int n, CVector amplitudes);

  /// A single Slater determinant with amplitude 1.
  static FermionState basis_state(const SlaterBasisState& occupied);

  int single_particle_dim() const noexcept { return d_; }
  int particles() const noexcept { return n_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(amplitudes_.size()); }
  const CVector& amplitudes() const noexcept { return amplitudes_; }
  Complex amplitude(std::span<const int> modes) const;

 private:
  int d_;
  int n_;
  CVector amplitudes_;
};

/// N single-particle states, each unit norm in C^d.
class ProductState {
 public:
  explicit ProductState(std::vector<CVector> factors);

  const std::vector<CVector>& factors() const noexcept { return factors_; }
  int particles() const noexcept { return static_cast<int>(factors_.size()); }
  int single_particle_dim() const noexcept {
    return static_cast<int>(factors_.front().size());
  }

 private:
  std::vector<CVector> factors_;
};

/// Two labeled parties; amplitudes(a, b) is the weight of |a>|b>.
class DistinguishableState {
 public:
  explicit DistinguishableState(CMatrix amplitudes);

  const CMatrix& amplitudes() const noexcept { return amplitudes_; }
  int dim1() const noexcept { return static_cast<int>(amplitudes_.rows()); }
  int dim2() const noexcept { return static_cast<int>(amplitudes_.cols()); }

 private:
  CMatrix amplitudes_;
};

/**
 * Projects a product state onto the antisymmetric subspace and normalizes.
 * The amplitude on {a_1 < ... < a_N} is the determinant of the N x N matrix
 * whose (r, c) entry is component a_r of factor c.
 */
FermionState antisymmetrize(const ProductState& product);

/// <a|b>, conjugate-linear in a.
Complex overlap(const FermionState& a, const FermionState& b);

/// k-th compound matrix: entry (alpha, beta) = det U[alpha, beta] over
/// k-subsets in lexicographic order.
CMatrix compound_matrix(const CMatrix& u, int k);

/// Applies U to every particle: |j> -> sum_i U(i, j) |i>.
FermionState single_particle_transform(const FermionState& state, const CMatrix& u);

/// Mode -> (site, internal) for a two-site system. Site 0 is the left site
/// and becomes party 1 after freezing.
struct SitePartition {
  std::vector<int> site;
  std::vector<int> internal;

  /// Modes ordered (A0, A1, ..., B0, B1, ...) with `internal_dim` per site.
  static SitePartition two_sites(int internal_dim);
};

/// Reads a two-fermion state with one particle per site as a state of two
/// distinguishable parties labeled by site.
DistinguishableState freeze(const FermionState& state, const SitePartition& partition);

/// Built-in two-fermion states over modes (A0, A1, B0, B1):
///   slater-AB      the determinant {A0, B1}
///   non-slater-AB  ({A0, B1} + {A1, B0}) / sqrt(2)
FermionState named_state(std::string_view name);

}  // namespace fermitangle::fock
