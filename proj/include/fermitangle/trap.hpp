// Copyright 2026 The fermitangle Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file trap.hpp
 * @brief Two particles in a 1D harmonic trap with hard-core contact repulsion.
 *
 * Works in oscillator units (hbar = m = omega = 1), u = sqrt(m omega / hbar) x.
 * In the infinitely repulsive limit the ground state is
 *
 *   psi_gs(u1, u2)      = |phi_0(u1) phi_1(u2) - phi_1(u1) phi_0(u2)| / sqrt(2)
 *
 * for labeled particles, and the plain determinant
 *
 *   psi_ordered(ul, ur) =  (phi_0(ul) phi_1(ur) - phi_1(ul) phi_0(ur)) / sqrt(2)
 *
 * in left/right coordinates. The ordered form is evaluated on the whole plane
 * (its antisymmetric extension), which gives the one-body kernel
 * (phi_0 phi_0' + phi_1 phi_1') / 2 with purity exactly 1/2.
 *
 * One-body kernels are discretized with the trapezoid rule on [-L, L].
 */

#pragma once

#include <filesystem>
#include <vector>

#include "fermitangle/types.hpp"

namespace fermitangle::trap {

inline constexpr double kDefaultExtent = 6.0;
inline constexpr int kDefaultPoints = 600;
/// Kernels whose quadrature trace misses 1 by more than this are rejected.
inline constexpr double kTraceTolerance = 1e-3;

class TrapGrid {
 public:
  /// Uniform nodes u_k = -L + 2Lk/(n-1), trapezoid weights. Needs n >= 3, L > 0.
  TrapGrid(double extent, int points);

  double extent() const noexcept { return extent_; }
  int points() const noexcept { return static_cast<int>(nodes_.size()); }
  double spacing() const noexcept { return 2.0 * extent_ / (points() - 1); }
  const Eigen::VectorXd& nodes() const noexcept { return nodes_; }
  const Eigen::VectorXd& weights() const noexcept { return weights_; }

 private:
  double extent_;
  Eigen::VectorXd nodes_;
  Eigen::VectorXd weights_;
};

/// Normalized Hermite function phi_k(u) = N_k exp(-u^2/2) H_k(u).
double hermite_mode(int k, double u);

double psi_gs(double u1, double u2);
double psi_ordered(double ul, double ur);

enum class Labeling { Labeled, Ordered };

const char* to_string(Labeling which) noexcept;

struct Kernel {
  TrapGrid grid;
  RMatrix values;  ///< K(u_k, u_l)

  /// sum_k K(u_k, u_k) w_k
  double trace() const;
  /// Diagonal K(u_k, u_k).
  Eigen::VectorXd density() const;
};

/// K(u, u') = integral psi(u, v) psi(u', v) dv. Throws ErrorCode::GridTooCoarse
/// when the quadrature trace deviates from 1 by more than kTraceTolerance.
Kernel one_body_kernel(Labeling which, const TrapGrid& grid);

/// Tr rho^2 = sum_kl K_kl^2 w_k w_l.
double kernel_purity(const Kernel& kernel);

/// Eigenvalues of W^1/2 K W^1/2, descending.
std::vector<double> kernel_spectrum(const Kernel& kernel);

struct TrapReport {
  double linear_entropy_labeled = 0.0;
  double linear_entropy_ordered = 0.0;
  double extent = 0.0;
  int points = 0;
  int coarse_points = 0;
  /// |S(n) - S(n/2)| for each labeling.
  double convergence_labeled = 0.0;
  double convergence_ordered = 0.0;

  double convergence() const;
};

/// Both linear entropies on `grid`, with a refinement estimate from a grid of
/// half as many nodes over the same extent.
TrapReport trap_report(const TrapGrid& grid);

/// CSV with header `u,u_prime,value`, one row per node pair.
void write_kernel_csv(const Kernel& kernel, const std::filesystem::path& path);
/// CSV with header `u,density`.
void write_density_csv(const Kernel& kernel, const std::filesystem::path& path);

}  // namespace fermitangle::trap
