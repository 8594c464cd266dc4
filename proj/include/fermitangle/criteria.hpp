// Copyright 2026 The fermitangle Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file criteria.hpp
 * @brief Purity-based entanglement classification of pure fermionic states.
 *
 * For an N-fermion pure state and a subsystem of M fermions, the purity of
 * the M-fermion reduced state satisfies
 *
 *   1 / C(d, min(M, N-M))  <=  Tr rho_M^2  <=  1 / C(N, M)
 *
 * with equality at the upper end exactly for single Slater determinants.
 * Anything strictly below the upper bound signals entanglement beyond the
 * exchange correlations every antisymmetric state carries.
 */

#pragma once

#include "fermitangle/fock.hpp"

namespace fermitangle::criteria {

inline constexpr double kDefaultTolerance = 1e-8;

struct PurityBounds {
  double lower = 0.0;  ///< 1 / d_M
  double upper = 0.0;  ///< 1 / C(N, M)
  long long d_m = 0;   ///< C(d, min(M, N-M))
};

enum class Classification { NonEntangled, Entangled };

const char* to_string(Classification c) noexcept;

struct Verdict {
  Classification classification = Classification::NonEntangled;
  double purity = 0.0;
  PurityBounds bounds;
  double margin = 0.0;  ///< upper - purity
};

/// Throws ErrorCode::BadM unless 1 <= M <= N-1 and N <= d.
PurityBounds purity_bounds(int n, int m, int d);

/// Throws ErrorCode::InvariantViolation if the purity falls outside the
/// tolerance-expanded bounds.
Verdict classify(const fock::FermionState& state, int m, double tol = kDefaultTolerance);

/// sqrt(max(0, upper - purity) / (upper - lower)); zero when the bounds meet.
double fermionic_concurrence(const fock::FermionState& state, int m = 1);

enum class Correlation { Uncorrelated, Correlated };

const char* to_string(Correlation c) noexcept;

struct CorrelationReport {
  Correlation correlation = Correlation::Uncorrelated;
  double linear_entropy_first = 0.0;
  double linear_entropy_second = 0.0;
};

/// Correlated iff the linear entropy of party 1 exceeds tol.
CorrelationReport correlation_criterion(const fock::DistinguishableState& state,
                                        double tol = kDefaultTolerance);

}  // namespace fermitangle::criteria
