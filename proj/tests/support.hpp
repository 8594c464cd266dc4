// Copyright 2026 The fermitangle Authors
// SPDX-License-Identifier: Apache-2.0

// Random inputs shared by the test binaries.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "fermitangle/fock.hpp"

namespace fermitangle::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double gauss() { return normal_(engine_); }
  Complex cgauss() {
    const double re = gauss();
    return {re, gauss()};
  }
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  double uniform_real(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  CVector unit_vector(int d) {
    CVector v(d);
    for (int i = 0; i < d; ++i) v(i) = cgauss();
    return v.normalized();
  }

  /// Q factor of a complex Gaussian matrix, phases fixed by R's diagonal.
  CMatrix unitary(int d) {
    CMatrix g(d, d);
    for (int c = 0; c < d; ++c)
      for (int r = 0; r < d; ++r) g(r, c) = cgauss();
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ() * CMatrix::Identity(d, d);
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < d; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
    return q;
  }

  fock::FermionState state(int d, int n) {
    CVector a(static_cast<Eigen::Index>(fock::binomial(d, n)));
    for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = cgauss();
    return fock::FermionState::normalized(d, n, std::move(a));
  }

  /// Generic (linearly independent with probability 1) product state.
  fock::ProductState product(int d, int n) {
    std::vector<CVector> factors;
    for (int i = 0; i < n; ++i) factors.push_back(unit_vector(d));
    return fock::ProductState(std::move(factors));
  }

  fock::DistinguishableState pair(int d1, int d2) {
    CMatrix a(d1, d2);
    for (int r = 0; r < d1; ++r)
      for (int c = 0; c < d2; ++c) a(r, c) = cgauss();
    return fock::DistinguishableState(a / a.norm());
  }

  /// Two-fermion state on modes (A0, A1, B0, B1) with one fermion per site.
  fock::FermionState one_per_site_state() {
    CVector a = CVector::Zero(6);
    // {0,2}, {0,3}, {1,2}, {1,3}
    for (int rank : {1, 2, 3, 4}) a(rank) = cgauss();
    return fock::FermionState::normalized(4, 2, std::move(a));
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace fermitangle::testing
