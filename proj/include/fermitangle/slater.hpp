// Copyright 2026 The fermitangle Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file slater.hpp
 * @brief Canonical forms of two-particle states.
 *
 * A two-fermion state is written psi = sum_ij w_ij |i>|j> with w antisymmetric
 * and sum |w_ij|^2 = 1. Every such w admits the pairing form
 *
 *   w = U * blockdiag(z_1 J, z_2 J, ...) * U^T,   J = [[0, 1], [-1, 0]],
 *
 * with U unitary. The number of nonzero z_i is the Slater rank: rank 1 means
 * the state is a single Slater determinant in the basis given by U.
 * Distinguishable pairs use the Schmidt (singular value) form instead.
 */

#pragma once

#include <vector>

#include "fermitangle/fock.hpp"
#include "fermitangle/types.hpp"

namespace fermitangle::slater {

inline constexpr double kDefaultRankTolerance = 1e-8;

class CoeffMatrix {
 public:
  /// Validates w^T = -w within 1e-12 and unit Frobenius norm within 1e-10.
  explicit CoeffMatrix(CMatrix w);

  const CMatrix& matrix() const noexcept { return w_; }
  int dim() const noexcept { return static_cast<int>(w_.rows()); }

 private:
  CMatrix w_;
};

struct SlaterDecomposition {
  CMatrix unitary;
  /// floor(d/2) entries, descending in magnitude.
  std::vector<Complex> pair_coeffs;

  /// U * blockdiag(z_i J) * U^T.
  CMatrix reconstruct() const;
};

struct SchmidtDecomposition {
  std::vector<double> coefficients;  ///< descending
  CMatrix left;                      ///< orthonormal columns
  CMatrix right;

  CMatrix reconstruct() const;
};

/// w_ij = amplitude({i,j}) / sqrt(2) for i < j. Requires N = 2.
CoeffMatrix coeff_matrix(const fock::FermionState& state);

/// Pairing form of w. Throws ErrorCode::DegeneracyResolutionFailure if the
/// result does not reproduce w within 1e-8.
SlaterDecomposition slater_decompose(const CoeffMatrix& w);

/// Number of pair coefficients with |z| > tol. Requires N = 2.
int slater_rank(const fock::FermionState& state, double tol = kDefaultRankTolerance);

/// 4 |Pf w| for N = 2, d = 4.
double concurrence_2f(const fock::FermionState& state);

SchmidtDecomposition schmidt_decompose(const fock::DistinguishableState& state);

/// 2 |det A| for a pair of qubits.
double concurrence_2qubit(const fock::DistinguishableState& state);

}  // namespace fermitangle::slater
