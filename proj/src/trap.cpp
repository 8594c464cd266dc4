// Copyright 2026 The fermitangle Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermitangle/trap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "fermitangle/error.hpp"

namespace fermitangle::trap {

TrapGrid::TrapGrid(double extent, int points) : extent_(extent) {
  if (!(extent > 0.0) || !std::isfinite(extent) || points < 3) {
    throw Error(ErrorCode::InvalidArgument, "trap grid needs L > 0 and n >= 3");
  }
  nodes_.resize(points);
  weights_.resize(points);
  const double h = 2.0 * extent / (points - 1);
  for (int k = 0; k < points; ++k) {
    nodes_(k) = -extent + h * k;
    weights_(k) = h;
  }
  weights_(0) *= 0.5;
  weights_(points - 1) *= 0.5;
}

double hermite_mode(int k, double u) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "Hermite index must be >= 0");
  // phi_{j+1} = sqrt(2/(j+1)) u phi_j - sqrt(j/(j+1)) phi_{j-1}
  double prev = 0.0;
  double cur = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * u * u);
  for (int j = 0; j < k; ++j) {
    const double next =
        std::sqrt(2.0 / (j + 1)) * u * cur - std::sqrt(static_cast<double>(j) / (j + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double psi_ordered(double ul, double ur) {
  return (hermite_mode(0, ul) * hermite_mode(1, ur) - hermite_mode(1, ul) * hermite_mode(0, ur)) /
         std::numbers::sqrt2;
}

double psi_gs(double u1, double u2) { return std::abs(psi_ordered(u1, u2)); }

const char* to_string(Labeling which) noexcept {
  return which == Labeling::Labeled ? "labeled" : "ordered";
}

double Kernel::trace() const { return values.diagonal().dot(grid.weights()); }

Eigen::VectorXd Kernel::density() const { return values.diagonal(); }

Kernel one_body_kernel(Labeling which, const TrapGrid& grid) {
  const int n = grid.points();
  const Eigen::VectorXd& u = grid.nodes();
  Eigen::VectorXd phi0(n), phi1(n);
  for (int k = 0; k < n; ++k) {
    phi0(k) = hermite_mode(0, u(k));
    phi1(k) = hermite_mode(1, u(k));
  }
  // Psi(k, l) = psi(u_k, v_l)
  RMatrix psi = (phi0 * phi1.transpose() - phi1 * phi0.transpose()) / std::numbers::sqrt2;
  if (which == Labeling::Labeled) psi = psi.cwiseAbs();

  RMatrix values = psi * grid.weights().asDiagonal() * psi.transpose();
  values = (0.5 * (values + values.transpose())).eval();
  Kernel kernel{grid, std::move(values)};

  const double trace = kernel.trace();
  if (std::abs(trace - 1.0) > kTraceTolerance) {
    std::ostringstream msg;
    msg << to_string(which) << " kernel trace " << trace << " deviates from 1 (L="
        << grid.extent() << ", n=" << n << ")";
    throw Error(ErrorCode::GridTooCoarse, msg.str());
  }
  return kernel;
}

double kernel_purity(const Kernel& kernel) {
  const Eigen::VectorXd& w = kernel.grid.weights();
  return (w.asDiagonal() * kernel.values.cwiseAbs2() * w.asDiagonal()).sum();
}

std::vector<double> kernel_spectrum(const Kernel& kernel) {
  const Eigen::VectorXd root = kernel.grid.weights().cwiseSqrt();
  const RMatrix sym = root.asDiagonal() * kernel.values * root.asDiagonal();
  Eigen::SelfAdjointEigenSolver<RMatrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NonConvergence, "kernel eigen-solver did not converge");
  }
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(out.rbegin(), out.rend());
  return out;
}

double TrapReport::convergence() const {
  return std::max(convergence_labeled, convergence_ordered);
}

TrapReport trap_report(const TrapGrid& grid) {
  const auto entropy = [](Labeling which, const TrapGrid& g) {
    return 1.0 - kernel_purity(one_body_kernel(which, g));
  };
  const TrapGrid coarse(grid.extent(), std::max(3, grid.points() / 2));

  TrapReport r;
  r.extent = grid.extent();
  r.points = grid.points();
  r.coarse_points = coarse.points();
  r.linear_entropy_labeled = entropy(Labeling::Labeled, grid);
  r.linear_entropy_ordered = entropy(Labeling::Ordered, grid);
  r.convergence_labeled =
      std::abs(r.linear_entropy_labeled - entropy(Labeling::Labeled, coarse));
  r.convergence_ordered =
      std::abs(r.linear_entropy_ordered - entropy(Labeling::Ordered, coarse));
  return r;
}

namespace {

std::ofstream open_csv(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  return out;
}

void put(std::ofstream& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  out << buf;
}

}  // namespace

void write_kernel_csv(const Kernel& kernel, const std::filesystem::path& path) {
  auto out = open_csv(path);
  out << "u,u_prime,value\n";
  const Eigen::VectorXd& u = kernel.grid.nodes();
  for (Eigen::Index k = 0; k < u.size(); ++k) {
    for (Eigen::Index l = 0; l < u.size(); ++l) {
      put(out, u(k));
      out << ',';
      put(out, u(l));
      out << ',';
      put(out, kernel.values(k, l));
      out << '\n';
    }
  }
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

void write_density_csv(const Kernel& kernel, const std::filesystem::path& path) {
  auto out = open_csv(path);
  out << "u,density\n";
  const Eigen::VectorXd& u = kernel.grid.nodes();
  const Eigen::VectorXd rho = kernel.density();
  for (Eigen::Index k = 0; k < u.size(); ++k) {
    put(out, u(k));
    out << ',';
    put(out, rho(k));
    out << '\n';
  }
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

}  // namespace fermitangle::trap
