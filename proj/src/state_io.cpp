// Copyright 2026 The fermitangle Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermitangle/state_io.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "fermitangle/error.hpp"

namespace fermitangle::io {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void malformed(const std::string& why) {
  throw Error(ErrorCode::Parse, "malformed state file: " + why);
}

int read_int(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    malformed(std::string("missing integer field '") + key + "'");
  }
  return doc[key].get<int>();
}

double read_number(const json& entry, const char* key, bool required) {
  if (!entry.contains(key)) {
    if (required) malformed(std::string("amplitude entry lacks '") + key + "'");
    return 0.0;
  }
  if (!entry[key].is_number()) malformed(std::string("'") + key + "' must be a number");
  const double v = entry[key].get<double>();
  if (!std::isfinite(v)) malformed("non-finite amplitude");
  return v;
}

}  // namespace

LoadedState parse_state(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(e.what());
  }
  if (!doc.is_object()) malformed("top level must be an object");

  const int d = read_int(doc, "d");
  const int n = read_int(doc, "N");
  if (d < 1 || n < 1 || n > d || d > 62) malformed("need 1 <= N <= d <= 62");
  const std::uint64_t dim = fock::binomial(d, n);
  if (dim > (std::uint64_t{1} << 26)) malformed("basis too large");

  if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array()) {
    malformed("missing array field 'amplitudes'");
  }
  CVector amplitudes = CVector::Zero(static_cast<Eigen::Index>(dim));
  std::vector<bool> seen(dim, false);
  for (const auto& entry : doc["amplitudes"]) {
    if (!entry.is_object() || !entry.contains("modes") || !entry["modes"].is_array()) {
      malformed("amplitude entries need a 'modes' array");
    }
    std::vector<int> modes;
    for (const auto& m : entry["modes"]) {
      if (!m.is_number_integer()) malformed("modes must be integers");
      modes.push_back(m.get<int>());
    }
    if (static_cast<int>(modes.size()) != n) malformed("modes list length differs from N");
    std::size_t rank = 0;
    try {
      rank = fock::rank_subset(modes, d);
    } catch (const Error& e) {
      malformed(e.what());
    }
    if (seen[rank]) malformed("duplicate basis state");
    seen[rank] = true;
    amplitudes(static_cast<Eigen::Index>(rank)) =
        Complex(read_number(entry, "re", true), read_number(entry, "im", false));
  }

  std::optional<std::uint64_t> seed;
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) malformed("'seed' must be a non-negative integer");
    seed = doc["seed"].get<std::uint64_t>();
  }

  const double norm = amplitudes.norm();
  if (std::abs(norm - 1.0) > kLoadNormTolerance) {
    std::ostringstream msg;
    msg << "state norm " << norm << " deviates from 1 by more than " << kLoadNormTolerance;
    throw Error(ErrorCode::NormDeviation, msg.str());
  }
  return {fock::FermionState::normalized(d, n, std::move(amplitudes)), seed, norm};
}

LoadedState load_state(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state(buffer.str());
}

std::string dump_state(const fock::FermionState& state, std::optional<std::uint64_t> seed) {
  ordered_json doc;
  doc["d"] = state.single_particle_dim();
  doc["N"] = state.particles();
  ordered_json entries = ordered_json::array();
  fock::for_each_subset(state.single_particle_dim(), state.particles(),
                        [&](std::size_t rank, std::span<const int> modes) {
                          const Complex a = state.amplitudes()(static_cast<Eigen::Index>(rank));
                          if (a == Complex(0.0, 0.0)) return;
                          ordered_json entry;
                          entry["modes"] = std::vector<int>(modes.begin(), modes.end());
                          entry["re"] = a.real();
                          entry["im"] = a.imag();
                          entries.push_back(std::move(entry));
                        });
  doc["amplitudes"] = std::move(entries);
  if (seed) doc["seed"] = *seed;
  return doc.dump(2) + "\n";
}

void save_state(const std::filesystem::path& path, const fock::FermionState& state,
                std::optional<std::uint64_t> seed) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << dump_state(state, seed);
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

fock::FermionState random_slater_state(int d, int n, std::uint64_t seed) {
  if (d < 1 || n < 1 || n > d) {
    throw Error(ErrorCode::InvalidArgument, "need 1 <= N <= d");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  CMatrix g(d, d);
  for (int c = 0; c < d; ++c) {
    for (int r = 0; r < d; ++r) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(r, c) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(d, d);
  std::vector<CVector> factors;
  for (int c = 0; c < n; ++c) factors.emplace_back(q.col(c).normalized());
  return fock::antisymmetrize(fock::ProductState(std::move(factors)));
}

}  // namespace fermitangle::io
