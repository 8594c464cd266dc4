// Copyright 2026 The fermitangle Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermitangle/rdm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "fermitangle/error.hpp"

namespace fermitangle::rdm {

std::string BasisTag::describe() const {
  if (kind == Kind::Party) return "party " + std::to_string(party);
  return std::to_string(particles) + "-fermion Slater basis over " + std::to_string(modes) +
         " modes";
}

DensityMatrix::DensityMatrix(CMatrix matrix, BasisTag tag)
    : matrix_(std::move(matrix)), tag_(tag) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "density matrix must be square and non-empty");
  }
  const double asym = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermitianTolerance) {
    throw Error(ErrorCode::InvariantViolation,
                "density matrix not Hermitian (defect " + std::to_string(asym) + ")");
  }
  const Complex trace = matrix_.trace();
  if (std::abs(trace - Complex(1.0, 0.0)) > kTraceTolerance) {
    throw Error(ErrorCode::InvariantViolation,
                "density matrix trace " + std::to_string(trace.real()) + " is not 1");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(matrix_, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NonConvergence, "eigen-solver failed while validating density matrix");
  }
  if (solver.eigenvalues().minCoeff() < kEigenvalueFloor) {
    throw Error(ErrorCode::InvariantViolation, "density matrix has a negative eigenvalue");
  }
}

DensityMatrix reduce(const fock::FermionState& state, int m) {
  const int d = state.single_particle_dim();
  const int n = state.particles();
  if (m < 1 || m > n - 1) {
    throw Error(ErrorCode::BadM, "subsystem size M=" + std::to_string(m) +
                                     " outside [1, " + std::to_string(n - 1) + "]");
  }
  const int rest = n - m;
  // Split every N-configuration into (kept, traced) parts:
  // coeffs(kept, traced) = sign * psi(kept u traced).
  CMatrix coeffs = CMatrix::Zero(static_cast<Eigen::Index>(fock::binomial(d, m)),
                                 static_cast<Eigen::Index>(fock::binomial(d, rest)));
  std::vector<int> kept(static_cast<std::size_t>(m));
  std::vector<int> traced(static_cast<std::size_t>(rest));
  fock::for_each_subset(d, n, [&](std::size_t rank, std::span<const int> modes) {
    const Complex amp = state.amplitudes()(static_cast<Eigen::Index>(rank));
    if (amp == Complex(0.0, 0.0)) return;
    fock::for_each_subset(n, m, [&](std::size_t, std::span<const int> slots) {
      std::size_t k = 0, t = 0;
      int inversions = 0;
      for (int p = 0; p < n; ++p) {
        if (k < slots.size() && slots[k] == p) {
          kept[k++] = modes[p];
        } else {
          traced[t++] = modes[p];
        }
      }
      // (kept, traced) -> sorted: each pair kept > traced is one inversion.
      for (int a : kept) {
        for (int b : traced) inversions += (a > b);
      }
      const double sign = (inversions % 2 == 0) ? 1.0 : -1.0;
      coeffs(static_cast<Eigen::Index>(fock::rank_subset(kept, d)),
             static_cast<Eigen::Index>(fock::rank_subset(traced, d))) = sign * amp;
    });
  });

  CMatrix rho = coeffs * coeffs.adjoint();
  rho /= static_cast<double>(fock::binomial(n, m));
  rho = (0.5 * (rho + rho.adjoint())).eval();
  return DensityMatrix(std::move(rho), BasisTag{BasisTag::Kind::Slater, d, m, 0});
}

DensityMatrix reduce_bipartite(const fock::DistinguishableState& state, Side side) {
  const CMatrix& a = state.amplitudes();
  CMatrix rho = side == Side::First ? CMatrix(a * a.adjoint())
                                    : CMatrix((a.adjoint() * a).transpose());
  rho = (0.5 * (rho + rho.adjoint())).eval();
  return DensityMatrix(std::move(rho),
                       BasisTag{BasisTag::Kind::Party, 0, 0, static_cast<int>(side)});
}

double purity(const DensityMatrix& rho) {
  // Tr rho^2 = sum |rho_ij|^2 for Hermitian rho.
  return rho.matrix().squaredNorm();
}

double linear_entropy(const DensityMatrix& rho) { return 1.0 - purity(rho); }

Spectrum spectral(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho.matrix());
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NonConvergence, "Hermitian eigen-solver did not converge");
  }
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  const auto n = values.size();

  const CMatrix rebuilt = vectors * values.cast<Complex>().asDiagonal() * vectors.adjoint();
  if ((rebuilt - rho.matrix()).norm() > 1e-9) {
    throw Error(ErrorCode::NonConvergence, "spectral reconstruction error exceeds 1e-9");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return values(a) > values(b); });

  Spectrum out;
  out.eigenvectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.eigenvalues.push_back(std::clamp(values(order[i]), 0.0, 1.0));
    out.eigenvectors.col(i) = vectors.col(order[i]);
  }
  return out;
}

}  // namespace fermitangle::rdm
