// Copyright 2026 The fermitangle Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file rdm.hpp
 * @brief Reduced density matrices, spectra, purity and linear entropy.
 *
 * The M-fermion reduced density matrix of an N-fermion pure state is returned
 * over the C(d, M) Slater basis and normalized to unit trace:
 *
 *   rho(b, b') = C(N, M)^-1 * sum_g s(b, g) s(b', g) psi(b u g) conj(psi(b' u g))
 *
 * where g runs over (N - M)-subsets disjoint from both b and b', and s(b, g)
 * is the parity of the permutation that merges the concatenation (b, g) into
 * increasing order. This coincides with tracing N - M labeled particle slots
 * out of the first-quantized wavefunction.
 */

#pragma once

#include <string>
#include <vector>

#include "fermitangle/fock.hpp"
#include "fermitangle/types.hpp"

namespace fermitangle::rdm {

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kEigenvalueFloor = -1e-10;

/// What the rows and columns of a density matrix refer to.
struct BasisTag {
  enum class Kind { Slater, Party };
  Kind kind = Kind::Slater;
  int modes = 0;      ///< Slater: single-particle dimension d
  int particles = 0;  ///< Slater: M
  int party = 0;      ///< Party: 1 or 2

  std::string describe() const;
};

class DensityMatrix {
 public:
  /// Validates Hermiticity, unit trace and positivity.
  DensityMatrix(CMatrix matrix, BasisTag tag);

  int dim() const noexcept { return static_cast<int>(matrix_.rows()); }
  const CMatrix& matrix() const noexcept { return matrix_; }
  const BasisTag& basis() const noexcept { return tag_; }

 private:
  CMatrix matrix_;
  BasisTag tag_;
};

struct Spectrum {
  std::vector<double> eigenvalues;  ///< descending, clipped to [0, 1]
  CMatrix eigenvectors;             ///< column i pairs with eigenvalues[i]
};

/// M-fermion reduction, 1 <= M <= N - 1. Throws ErrorCode::BadM otherwise.
DensityMatrix reduce(const fock::FermionState& state, int m);

enum class Side { First = 1, Second = 2 };

/// rho_1 = A A^dagger, rho_2 = (A^dagger A)^T.
DensityMatrix reduce_bipartite(const fock::DistinguishableState& state, Side side);

/// Tr rho^2.
double purity(const DensityMatrix& rho);

/// 1 - Tr rho^2.
double linear_entropy(const DensityMatrix& rho);

/// Eigen-decomposition; throws ErrorCode::NonConvergence on solver failure
/// or when the reconstruction error exceeds 1e-9.
Spectrum spectral(const DensityMatrix& rho);

}  // namespace fermitangle::rdm
