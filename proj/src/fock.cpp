// Copyright 2026 The fermitangle Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermitangle/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fermitangle/error.hpp"

namespace fermitangle {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidConfiguration: return "InvalidConfiguration";
    case ErrorCode::LinearlyDependentFactors: return "LinearlyDependentFactors";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::UnsupportedN: return "UnsupportedN";
    case ErrorCode::DoubleOccupancy: return "DoubleOccupancy";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::BadM: return "BadM";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::DegeneracyResolutionFailure: return "DegeneracyResolutionFailure";
    case ErrorCode::UnsupportedDims: return "UnsupportedDims";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::NormDeviation: return "NormDeviation";
    case ErrorCode::Io: return "Io";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

namespace fock {

namespace {

void check_modes(std::span<const int> modes, int d) {
  for (std::size_t i = 0; i < modes.size(); ++i) {
    if (modes[i] < 0 || modes[i] >= d) {
      throw Error(ErrorCode::InvalidConfiguration,
                  "mode " + std::to_string(modes[i]) + " outside [0, " +
                      std::to_string(d) + ")");
    }
    if (i > 0 && modes[i] <= modes[i - 1]) {
      throw Error(ErrorCode::InvalidConfiguration,
                  "modes must be strictly increasing");
    }
  }
}

void check_dims(int d, int n) {
  if (d < 1 || n < 1 || n > d) {
    throw Error(ErrorCode::InvalidArgument,
                "need 1 <= N <= d, got d=" + std::to_string(d) +
                    ", N=" + std::to_string(n));
  }
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // exact: result * (n - k + i) is divisible by i at every step
    result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return result;
}

ModeIndex::ModeIndex(int value, int modes) : value_(value) {
  if (value < 0 || value >= modes) {
    throw Error(ErrorCode::InvalidConfiguration,
                "mode " + std::to_string(value) + " outside [0, " +
                    std::to_string(modes) + ")");
  }
}

SlaterBasisState::SlaterBasisState(std::vector<int> modes, int d)
    : modes_(std::move(modes)), d_(d) {
  check_modes(modes_, d_);
  if (modes_.empty()) {
    throw Error(ErrorCode::InvalidConfiguration, "empty configuration");
  }
}

std::size_t rank_subset(std::span<const int> modes, int d) {
  check_modes(modes, d);
  const int n = static_cast<int>(modes.size());
  // Count subsets that precede `modes`: at position i, every smaller choice
  // of mode leaves C(d - 1 - choice, n - 1 - i) completions.
  std::size_t rank = 0;
  int start = 0;
  for (int i = 0; i < n; ++i) {
    for (int m = start; m < modes[i]; ++m) {
      rank += binomial(d - 1 - m, n - 1 - i);
    }
    start = modes[i] + 1;
  }
  return rank;
}

std::size_t rank_subset(const SlaterBasisState& state) {
  return rank_subset(state.modes(), state.single_particle_dim());
}

std::vector<int> unrank_subset(std::size_t rank, int d, int n) {
  check_dims(d, n);
  if (rank >= binomial(d, n)) {
    throw Error(ErrorCode::InvalidArgument, "rank out of range");
  }
  std::vector<int> modes;
  modes.reserve(static_cast<std::size_t>(n));
  int m = 0;
  for (int i = 0; i < n; ++i) {
    while (true) {
      const std::size_t block = binomial(d - 1 - m, n - 1 - i);
      if (rank < block) break;
      rank -= block;
      ++m;
    }
    modes.push_back(m++);
  }
  return modes;
}

FermionState::FermionState(int d, int n, CVector amplitudes)
    : d_(d), n_(n), amplitudes_(std::move(amplitudes)) {
  check_dims(d, n);
  if (static_cast<std::uint64_t>(amplitudes_.size()) != binomial(d, n)) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(binomial(d, n)) + " amplitudes, got " +
                    std::to_string(amplitudes_.size()));
  }
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw Error(ErrorCode::NormDeviation,
                "state norm " + std::to_string(norm) + " is not 1");
  }
}

FermionState FermionState::normalized(int d, int n, CVector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error(ErrorCode::NormDeviation, "cannot normalize a zero or non-finite vector");
  }
  amplitudes /= norm;
  return FermionState(d, n, std::move(amplitudes));
}

FermionState FermionState::basis_state(const SlaterBasisState& occupied) {
  const int d = occupied.single_particle_dim();
  const int n = occupied.particles();
  CVector amplitudes = CVector::Zero(static_cast<Eigen::Index>(binomial(d, n)));
  amplitudes(static_cast<Eigen::Index>(rank_subset(occupied))) = 1.0;
  return FermionState(d, n, std::move(amplitudes));
}

Complex FermionState::amplitude(std::span<const int> modes) const {
  if (static_cast<int>(modes.size()) != n_) {
    throw Error(ErrorCode::DimensionMismatch, "configuration has the wrong particle number");
  }
  return amplitudes_(static_cast<Eigen::Index>(rank_subset(modes, d_)));
}

ProductState::ProductState(std::vector<CVector> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "product state needs at least one factor");
  }
  const auto d = factors_.front().size();
  for (const auto& f : factors_) {
    if (f.size() != d || d == 0) {
      throw Error(ErrorCode::DimensionMismatch, "factors must share one dimension");
    }
    if (std::abs(f.norm() - 1.0) > kNormTolerance) {
      throw Error(ErrorCode::NormDeviation, "product factors must be unit vectors");
    }
  }
  if (factors_.size() > static_cast<std::size_t>(d)) {
    throw Error(ErrorCode::LinearlyDependentFactors,
                "more factors than single-particle modes");
  }
}

DistinguishableState::DistinguishableState(CMatrix amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) {
    throw Error(ErrorCode::InvalidArgument, "empty bipartite state");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > kNormTolerance) {
    throw Error(ErrorCode::NormDeviation, "bipartite state must have unit norm");
  }
}

FermionState antisymmetrize(const ProductState& product) {
  const int d = product.single_particle_dim();
  const int n = product.particles();
  CMatrix components(d, n);
  for (int c = 0; c < n; ++c) components.col(c) = product.factors()[c];

  CVector amplitudes(static_cast<Eigen::Index>(binomial(d, n)));
  CMatrix minor(n, n);
  for_each_subset(d, n, [&](std::size_t rank, std::span<const int> modes) {
    for (int r = 0; r < n; ++r) minor.row(r) = components.row(modes[r]);
    amplitudes(static_cast<Eigen::Index>(rank)) = minor.determinant();
  });

  const double norm = amplitudes.norm();
  if (norm < kDependenceCutoff) {
    throw Error(ErrorCode::LinearlyDependentFactors,
                "antisymmetric projection vanishes (linearly dependent factors)");
  }
  return FermionState::normalized(d, n, std::move(amplitudes));
}

Complex overlap(const FermionState& a, const FermionState& b) {
  if (a.single_particle_dim() != b.single_particle_dim() ||
      a.particles() != b.particles()) {
    throw Error(ErrorCode::DimensionMismatch, "overlap of states with different (d, N)");
  }
  return a.amplitudes().dot(b.amplitudes());
}

CMatrix compound_matrix(const CMatrix& u, int k) {
  if (u.rows() != u.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "compound matrix needs a square input");
  }
  const int d = static_cast<int>(u.rows());
  check_dims(d, k);
  const auto size = static_cast<Eigen::Index>(binomial(d, k));
  CMatrix result(size, size);
  CMatrix minor(k, k);
  for_each_subset(d, k, [&](std::size_t row, std::span<const int> rows) {
    for_each_subset(d, k, [&](std::size_t col, std::span<const int> cols) {
      for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) minor(r, c) = u(rows[r], cols[c]);
      }
      result(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          minor.determinant();
    });
  });
  return result;
}

FermionState single_particle_transform(const FermionState& state, const CMatrix& u) {
  const int d = state.single_particle_dim();
  if (u.rows() != d || u.cols() != d) {
    throw Error(ErrorCode::DimensionMismatch, "transform must be d x d");
  }
  const double defect = (u.adjoint() * u - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (defect > kUnitaryTolerance) {
    throw Error(ErrorCode::NotUnitary,
                "transform deviates from unitarity by " + std::to_string(defect));
  }
  CVector amplitudes = compound_matrix(u, state.particles()) * state.amplitudes();
  return FermionState::normalized(d, state.particles(), std::move(amplitudes));
}

SitePartition SitePartition::two_sites(int internal_dim) {
  SitePartition p;
  for (int s = 0; s < 2; ++s) {
    for (int i = 0; i < internal_dim; ++i) {
      p.site.push_back(s);
      p.internal.push_back(i);
    }
  }
  return p;
}

DistinguishableState freeze(const FermionState& state, const SitePartition& partition) {
  if (state.particles() != 2) {
    throw Error(ErrorCode::UnsupportedN, "freeze is defined for two fermions only");
  }
  const int d = state.single_particle_dim();
  if (static_cast<int>(partition.site.size()) != d ||
      static_cast<int>(partition.internal.size()) != d) {
    throw Error(ErrorCode::DimensionMismatch, "site partition must cover every mode");
  }
  int dims[2] = {0, 0};
  for (int m = 0; m < d; ++m) {
    const int s = partition.site[m];
    if (s != 0 && s != 1) {
      throw Error(ErrorCode::InvalidArgument, "site labels must be 0 (left) or 1 (right)");
    }
    if (partition.internal[m] < 0) {
      throw Error(ErrorCode::InvalidArgument, "negative internal index");
    }
    dims[s] = std::max(dims[s], partition.internal[m] + 1);
  }
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      if (partition.site[a] == partition.site[b] &&
          partition.internal[a] == partition.internal[b]) {
        throw Error(ErrorCode::InvalidArgument, "two modes map to the same (site, internal)");
      }
    }
  }
  if (dims[0] == 0 || dims[1] == 0) {
    throw Error(ErrorCode::InvalidArgument, "both sites need at least one mode");
  }

  CMatrix amplitudes = CMatrix::Zero(dims[0], dims[1]);
  for_each_subset(d, 2, [&](std::size_t rank, std::span<const int> modes) {
    const Complex amp = state.amplitudes()(static_cast<Eigen::Index>(rank));
    const int i = modes[0];
    const int j = modes[1];
    if (partition.site[i] == partition.site[j]) {
      if (std::abs(amp) > kDoubleOccupancyCutoff) {
        throw Error(ErrorCode::DoubleOccupancy,
                    "amplitude on modes {" + std::to_string(i) + "," + std::to_string(j) +
                        "} puts both fermions on one site");
      }
      return;
    }
    // {i<j} is (|i>|j> - |j>|i>)/sqrt(2); keep the branch with the left
    // particle first.
    if (partition.site[i] == 0) {
      amplitudes(partition.internal[i], partition.internal[j]) += amp;
    } else {
      amplitudes(partition.internal[j], partition.internal[i]) -= amp;
    }
  });
  const double norm = amplitudes.norm();
  if (norm < kDoubleOccupancyCutoff) {
    throw Error(ErrorCode::DoubleOccupancy, "state has no weight on one-per-site pairs");
  }
  return DistinguishableState(amplitudes / norm);
}

FermionState named_state(std::string_view name) {
  constexpr int d = 4;
  CVector amplitudes = CVector::Zero(6);
  const int a0b1[] = {0, 3};
  const int a1b0[] = {1, 2};
  if (name == "slater-AB") {
    amplitudes(static_cast<Eigen::Index>(rank_subset(a0b1, d))) = 1.0;
  } else if (name == "non-slater-AB") {
    const double h = 1.0 / std::sqrt(2.0);
    amplitudes(static_cast<Eigen::Index>(rank_subset(a0b1, d))) = h;
    amplitudes(static_cast<Eigen::Index>(rank_subset(a1b0, d))) = h;
  } else {
    throw Error(ErrorCode::UnknownName, "unknown state name '" + std::string(name) + "'");
  }
  return FermionState::normalized(d, 2, std::move(amplitudes));
}

}  // namespace fock
}  // namespace fermitangle
