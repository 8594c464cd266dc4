// Copyright 2026 The fermitangle Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermitangle/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fermitangle/error.hpp"
#include "fermitangle/rdm.hpp"

namespace fermitangle::criteria {

const char* to_string(Classification c) noexcept {
  return c == Classification::Entangled ? "Entangled" : "NonEntangled";
}

const char* to_string(Correlation c) noexcept {
  return c == Correlation::Correlated ? "Correlated" : "Uncorrelated";
}

PurityBounds purity_bounds(int n, int m, int d) {
  if (n < 2 || n > d || m < 1 || m > n - 1) {
    std::ostringstream msg;
    msg << "purity bounds need 1 <= M <= N-1 and N <= d (got N=" << n << ", M=" << m
        << ", d=" << d << ")";
    throw Error(ErrorCode::BadM, msg.str());
  }
  PurityBounds b;
  b.d_m = static_cast<long long>(fock::binomial(d, std::min(m, n - m)));
  b.lower = 1.0 / static_cast<double>(b.d_m);
  b.upper = 1.0 / static_cast<double>(fock::binomial(n, m));
  return b;
}

Verdict classify(const fock::FermionState& state, int m, double tol) {
  const int n = state.particles();
  const int d = state.single_particle_dim();
  const PurityBounds bounds = purity_bounds(n, m, d);
  const double p = rdm::purity(rdm::reduce(state, m));

  if (p > bounds.upper + tol || p < bounds.lower - tol) {
    std::ostringstream msg;
    msg << "purity " << p << " outside [" << bounds.lower << ", " << bounds.upper << "]";
    throw Error(ErrorCode::InvariantViolation, msg.str());
  }

  Verdict v;
  v.purity = p;
  v.bounds = bounds;
  v.margin = bounds.upper - p;
  // Degenerate bounds (e.g. N = d): only one antisymmetric state exists.
  const bool degenerate = bounds.upper - bounds.lower <= tol;
  v.classification = (degenerate || std::abs(v.margin) <= tol) ? Classification::NonEntangled
                                                                : Classification::Entangled;
  return v;
}

double fermionic_concurrence(const fock::FermionState& state, int m) {
  const PurityBounds bounds =
      purity_bounds(state.particles(), m, state.single_particle_dim());
  const double span = bounds.upper - bounds.lower;
  if (span <= 0.0) return 0.0;
  const double p = rdm::purity(rdm::reduce(state, m));
  const double deficit = std::max(0.0, bounds.upper - p);
  return std::min(1.0, std::sqrt(deficit / span));
}

CorrelationReport correlation_criterion(const fock::DistinguishableState& state, double tol) {
  CorrelationReport r;
  r.linear_entropy_first = rdm::linear_entropy(rdm::reduce_bipartite(state, rdm::Side::First));
  r.linear_entropy_second =
      rdm::linear_entropy(rdm::reduce_bipartite(state, rdm::Side::Second));
  r.correlation =
      r.linear_entropy_first > tol ? Correlation::Correlated : Correlation::Uncorrelated;
  return r;
}

}  // namespace fermitangle::criteria
