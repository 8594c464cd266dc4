// Copyright 2026 The fermitangle Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermitangle/slater.hpp"

#include <cmath>
#include <string>

#include "fermitangle/error.hpp"

namespace fermitangle::slater {

namespace {

constexpr double kAntisymmetryTolerance = 1e-12;
constexpr double kCoeffNormTolerance = 1e-10;
constexpr double kReconstructionTolerance = 1e-8;
// Singular values at or below this are exact zeros up to roundoff.
constexpr double kNullPair = 1e-14;

}  // namespace

CoeffMatrix::CoeffMatrix(CMatrix w) : w_(std::move(w)) {
  if (w_.rows() != w_.cols() || w_.rows() < 2) {
    throw Error(ErrorCode::DimensionMismatch, "coefficient matrix must be square, d >= 2");
  }
  if ((w_ + w_.transpose()).cwiseAbs().maxCoeff() > kAntisymmetryTolerance) {
    throw Error(ErrorCode::InvalidArgument, "coefficient matrix is not antisymmetric");
  }
  if (std::abs(w_.squaredNorm() - 1.0) > kCoeffNormTolerance) {
    throw Error(ErrorCode::NormDeviation, "coefficient matrix must have unit Frobenius norm");
  }
}

CMatrix SlaterDecomposition::reconstruct() const {
  const auto d = unitary.rows();
  CMatrix block = CMatrix::Zero(d, d);
  for (std::size_t i = 0; i < pair_coeffs.size(); ++i) {
    const auto a = static_cast<Eigen::Index>(2 * i);
    block(a, a + 1) = pair_coeffs[i];
    block(a + 1, a) = -pair_coeffs[i];
  }
  return unitary * block * unitary.transpose();
}

CMatrix SchmidtDecomposition::reconstruct() const {
  Eigen::VectorXd c = Eigen::Map<const Eigen::VectorXd>(
      coefficients.data(), static_cast<Eigen::Index>(coefficients.size()));
  return left * c.cast<Complex>().asDiagonal() * right.transpose();
}

CoeffMatrix coeff_matrix(const fock::FermionState& state) {
  if (state.particles() != 2) {
    throw Error(ErrorCode::UnsupportedN, "coefficient matrix needs N = 2");
  }
  const int d = state.single_particle_dim();
  CMatrix w = CMatrix::Zero(d, d);
  const double scale = 1.0 / std::sqrt(2.0);
  fock::for_each_subset(d, 2, [&](std::size_t rank, std::span<const int> modes) {
    const Complex a = scale * state.amplitudes()(static_cast<Eigen::Index>(rank));
    w(modes[0], modes[1]) = a;
    w(modes[1], modes[0]) = -a;
  });
  return CoeffMatrix(std::move(w));
}

SlaterDecomposition slater_decompose(const CoeffMatrix& coeffs) {
  const CMatrix& w = coeffs.matrix();
  const auto d = w.rows();
  const auto pairs = static_cast<std::size_t>(d / 2);

  // Peel off one pair at a time. The top left singular vector u of the
  // residual r is an eigenvector of r r^dagger; its partner
  // v = -r conj(u) / sigma completes the block sigma (u v^T - v u^T), and
  // subtracting that block leaves the rest of r untouched.
  CMatrix residual = w;
  CMatrix basis(d, 0);
  std::vector<Complex> z;
  for (std::size_t k = 0; k < pairs; ++k) {
    Eigen::JacobiSVD<CMatrix> svd(residual, Eigen::ComputeFullU);
    const double sigma = svd.singularValues()(0);
    if (sigma <= kNullPair) break;
    CVector u = svd.matrixU().col(0);
    if (basis.cols() > 0) {
      u -= basis * (basis.adjoint() * u);
      u.normalize();
    }
    CVector v = -(residual * u.conjugate()) / sigma;
    if (basis.cols() > 0) v -= basis * (basis.adjoint() * v);
    v -= u * u.dot(v);
    v.normalize();
    residual -= sigma * (u * v.transpose() - v * u.transpose());

    basis.conservativeResize(Eigen::NoChange, basis.cols() + 2);
    basis.col(basis.cols() - 2) = u;
    basis.col(basis.cols() - 1) = v;
    z.emplace_back(sigma, 0.0);
  }

  // Complete U with an orthonormal basis of the null pairs (and the odd
  // leftover mode when d is odd).
  if (basis.cols() < d) {
    const CMatrix complement = CMatrix::Identity(d, d) - basis * basis.adjoint();
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (complement + complement.adjoint()));
    if (solver.info() != Eigen::Success) {
      throw Error(ErrorCode::DegeneracyResolutionFailure, "could not complete pairing basis");
    }
    const auto missing = d - basis.cols();
    basis.conservativeResize(Eigen::NoChange, d);
    // Eigenvalues ascend, so the projector's unit eigenvalues come last.
    basis.rightCols(missing) = solver.eigenvectors().rightCols(missing);
  }
  z.resize(pairs, Complex(0.0, 0.0));

  SlaterDecomposition out{std::move(basis), std::move(z)};
  const double unitarity =
      (out.unitary.adjoint() * out.unitary - CMatrix::Identity(d, d)).norm();
  const double error = (out.reconstruct() - w).norm();
  if (unitarity > kReconstructionTolerance || error > kReconstructionTolerance) {
    throw Error(ErrorCode::DegeneracyResolutionFailure,
                "pairing form does not reproduce the coefficient matrix (error " +
                    std::to_string(error) + ")");
  }
  return out;
}

int slater_rank(const fock::FermionState& state, double tol) {
  const auto decomposition = slater_decompose(coeff_matrix(state));
  int rank = 0;
  for (const Complex& z : decomposition.pair_coeffs) rank += (std::abs(z) > tol);
  return rank;
}

double concurrence_2f(const fock::FermionState& state) {
  if (state.particles() != 2 || state.single_particle_dim() != 4) {
    throw Error(ErrorCode::UnsupportedDims, "two-fermion concurrence needs N = 2, d = 4");
  }
  const CoeffMatrix coeffs = coeff_matrix(state);
  const CMatrix& w = coeffs.matrix();
  const Complex pf = w(0, 1) * w(2, 3) - w(0, 2) * w(1, 3) + w(0, 3) * w(1, 2);
  return 4.0 * std::abs(pf);
}

SchmidtDecomposition schmidt_decompose(const fock::DistinguishableState& state) {
  Eigen::JacobiSVD<CMatrix> svd(state.amplitudes(), Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success) {
    throw Error(ErrorCode::NonConvergence, "singular value decomposition failed");
  }
  SchmidtDecomposition out;
  const auto& values = svd.singularValues();
  out.coefficients.assign(values.data(), values.data() + values.size());
  out.left = svd.matrixU();
  out.right = svd.matrixV().conjugate();
  return out;
}

double concurrence_2qubit(const fock::DistinguishableState& state) {
  if (state.dim1() != 2 || state.dim2() != 2) {
    throw Error(ErrorCode::UnsupportedDims, "two-qubit concurrence needs a 2 x 2 state");
  }
  return 2.0 * std::abs(state.amplitudes().determinant());
}

}  // namespace fermitangle::slater
