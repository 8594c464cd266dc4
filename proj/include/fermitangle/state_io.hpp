// Copyright 2026 The fermitangle Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file state_io.hpp
 * @brief JSON state files.
 *
 *   {"d": 4, "N": 2, "amplitudes": [{"modes": [0,3], "re": 1.0, "im": 0.0}]}
 *
 * Unlisted basis states carry zero amplitude. An optional integer "seed"
 * records how a random state was generated. Files whose norm deviates from 1
 * by at most kLoadNormTolerance are renormalized; larger deviations are
 * rejected with ErrorCode::NormDeviation. Malformed input raises
 * ErrorCode::Parse.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "fermitangle/fock.hpp"

namespace fermitangle::io {

inline constexpr double kLoadNormTolerance = 1e-6;

struct LoadedState {
  fock::FermionState state;
  std::optional<std::uint64_t> seed;
  double input_norm = 1.0;  ///< norm of the amplitudes as written
};

LoadedState parse_state(std::string_view text);
LoadedState load_state(const std::filesystem::path& path);

/// Nonzero amplitudes only, in basis rank order; output is deterministic.
std::string dump_state(const fock::FermionState& state,
                       std::optional<std::uint64_t> seed = std::nullopt);
void save_state(const std::filesystem::path& path, const fock::FermionState& state,
                std::optional<std::uint64_t> seed = std::nullopt);

/// Random Slater determinant: antisymmetrized first N columns of the Q factor
/// of a complex Gaussian matrix drawn from std::mt19937_64(seed).
fock::FermionState random_slater_state(int d, int n, std::uint64_t seed);

}  // namespace fermitangle::io
