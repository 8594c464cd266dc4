// Copyright 2026 The fermitangle Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermitangle/fermitangle.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>

#include "fermitangle/criteria.hpp"
#include "fermitangle/error.hpp"
#include "fermitangle/fock.hpp"
#include "fermitangle/rdm.hpp"
#include "fermitangle/slater.hpp"
#include "fermitangle/state_io.hpp"
#include "fermitangle/trap.hpp"

using namespace fermitangle;

struct ft_state {
  fock::FermionState state;
  std::optional<std::uint64_t> seed;
  double input_norm = 1.0;
};

struct ft_pair {
  fock::DistinguishableState pair;
};

namespace {

thread_local std::string last_error;

ft_status status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidConfiguration: return FT_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return FT_ERR_PARSE;
    case ErrorCode::NormDeviation: return FT_ERR_NORM;
    case ErrorCode::BadM: return FT_ERR_BAD_M;
    case ErrorCode::Io: return FT_ERR_IO;
    case ErrorCode::GridTooCoarse: return FT_ERR_GRID_TOO_COARSE;
    case ErrorCode::DoubleOccupancy: return FT_ERR_DOUBLE_OCCUPANCY;
    case ErrorCode::UnsupportedN: return FT_ERR_UNSUPPORTED_N;
    case ErrorCode::UnsupportedDims: return FT_ERR_UNSUPPORTED_DIMS;
    case ErrorCode::DimensionMismatch: return FT_ERR_DIMENSION_MISMATCH;
    case ErrorCode::LinearlyDependentFactors: return FT_ERR_LINEARLY_DEPENDENT;
    case ErrorCode::NotUnitary: return FT_ERR_NOT_UNITARY;
    case ErrorCode::UnknownName: return FT_ERR_UNKNOWN_NAME;
    case ErrorCode::NonConvergence:
    case ErrorCode::DegeneracyResolutionFailure: return FT_ERR_NUMERICAL;
    case ErrorCode::InvariantViolation: return FT_ERR_INTERNAL;
  }
  return FT_ERR_INTERNAL;
}

ft_status fail(ft_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

/// Runs body, translating exceptions into status codes.
template <typename Body>
ft_status guarded(Body&& body) {
  try {
    last_error.clear();
    body();
    return FT_OK;
  } catch (const Error& e) {
    return fail(status_for(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(FT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(FT_ERR_INTERNAL, "unknown error");
  }
}

void require(bool condition, const char* what) {
  if (!condition) throw Error(ErrorCode::InvalidArgument, what);
}

void copy_complex(const Complex* data, size_t count, double* out, size_t capacity,
                  size_t* needed) {
  if (needed) *needed = count;
  if (out == nullptr) return;
  const size_t n = std::min(count, capacity / 2);
  for (size_t i = 0; i < n; ++i) {
    out[2 * i] = data[i].real();
    out[2 * i + 1] = data[i].imag();
  }
}

void copy_row_major(const CMatrix& m, double* out, size_t capacity) {
  if (out == nullptr) return;
  size_t i = 0;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c, ++i) {
      if (2 * i + 1 >= capacity) return;
      out[2 * i] = m(r, c).real();
      out[2 * i + 1] = m(r, c).imag();
    }
  }
}

char* duplicate(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* ft_version(void) { return "0.1.0"; }

const char* ft_last_error(void) { return last_error.c_str(); }

void ft_string_free(char* s) { delete[] s; }

ft_status ft_state_load(const char* path, ft_state** out) {
  return guarded([&] {
    require(path && out, "null argument");
    auto loaded = io::load_state(path);
    *out = new ft_state{std::move(loaded.state), loaded.seed, loaded.input_norm};
  });
}

ft_status ft_state_parse(const char* json_text, ft_state** out) {
  return guarded([&] {
    require(json_text && out, "null argument");
    auto loaded = io::parse_state(json_text);
    *out = new ft_state{std::move(loaded.state), loaded.seed, loaded.input_norm};
  });
}

ft_status ft_state_named(const char* name, ft_state** out) {
  return guarded([&] {
    require(name && out, "null argument");
    *out = new ft_state{fock::named_state(name), std::nullopt};
  });
}

ft_status ft_state_new(int d, int n, const double* amplitudes, size_t len, ft_state** out) {
  return guarded([&] {
    require(amplitudes && out, "null argument");
    require(d >= 1 && n >= 1 && n <= d && d <= 62, "need 1 <= N <= d <= 62");
    const auto dim = fock::binomial(d, n);
    if (len != 2 * dim) {
      throw Error(ErrorCode::DimensionMismatch,
                  "expected " + std::to_string(2 * dim) + " doubles, got " + std::to_string(len));
    }
    CVector amp(static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) amp(i) = Complex(amplitudes[2 * i], amplitudes[2 * i + 1]);
    if (std::abs(amp.norm() - 1.0) > io::kLoadNormTolerance) {
      throw Error(ErrorCode::NormDeviation, "amplitude norm deviates from 1 by more than 1e-6");
    }
    const double norm = amp.norm();
    *out = new ft_state{fock::FermionState::normalized(d, n, std::move(amp)), std::nullopt, norm};
  });
}

ft_status ft_state_random_slater(int d, int n, uint64_t seed, ft_state** out) {
  return guarded([&] {
    require(out, "null argument");
    *out = new ft_state{io::random_slater_state(d, n, seed), seed};
  });
}

void ft_state_free(ft_state* state) { delete state; }

ft_status ft_state_dims(const ft_state* state, int* d, int* n) {
  return guarded([&] {
    require(state && d && n, "null argument");
    *d = state->state.single_particle_dim();
    *n = state->state.particles();
  });
}

ft_status ft_state_amplitudes(const ft_state* state, double* out, size_t capacity,
                              size_t* needed) {
  return guarded([&] {
    require(state, "null argument");
    const auto& a = state->state.amplitudes();
    copy_complex(a.data(), static_cast<size_t>(a.size()), out, capacity, needed);
    if (needed) *needed *= 2;
  });
}

ft_status ft_state_seed(const ft_state* state, int* has_seed, uint64_t* seed) {
  return guarded([&] {
    require(state && has_seed && seed, "null argument");
    *has_seed = state->seed.has_value() ? 1 : 0;
    *seed = state->seed.value_or(0);
  });
}

ft_status ft_state_input_norm(const ft_state* state, double* out) {
  return guarded([&] {
    require(state && out, "null argument");
    *out = state->input_norm;
  });
}

ft_status ft_state_to_json(const ft_state* state, char** out) {
  return guarded([&] {
    require(state && out, "null argument");
    *out = duplicate(io::dump_state(state->state, state->seed));
  });
}

ft_status ft_state_save(const ft_state* state, const char* path) {
  return guarded([&] {
    require(state && path, "null argument");
    io::save_state(path, state->state, state->seed);
  });
}

ft_status ft_reduced_matrix(const ft_state* state, int m, double* out, size_t capacity,
                            size_t* dim) {
  return guarded([&] {
    require(state, "null argument");
    const auto rho = rdm::reduce(state->state, m);
    if (dim) *dim = static_cast<size_t>(rho.dim());
    copy_row_major(rho.matrix(), out, capacity);
  });
}

ft_status ft_purity(const ft_state* state, int m, double* out) {
  return guarded([&] {
    require(state && out, "null argument");
    *out = rdm::purity(rdm::reduce(state->state, m));
  });
}

ft_status ft_classify(const ft_state* state, int m, double tol, ft_verdict* out) {
  return guarded([&] {
    require(state && out, "null argument");
    require(tol >= 0.0 && std::isfinite(tol), "tolerance must be a finite non-negative number");
    const auto v = criteria::classify(state->state, m, tol);
    out->classification = v.classification == criteria::Classification::Entangled
                              ? FT_ENTANGLED
                              : FT_NON_ENTANGLED;
    out->purity = v.purity;
    out->lower = v.bounds.lower;
    out->upper = v.bounds.upper;
    out->d_m = v.bounds.d_m;
    out->margin = v.margin;
  });
}

ft_status ft_fermionic_concurrence(const ft_state* state, int m, double* out) {
  return guarded([&] {
    require(state && out, "null argument");
    *out = criteria::fermionic_concurrence(state->state, m);
  });
}

ft_status ft_slater_rank(const ft_state* state, double tol, int* out) {
  return guarded([&] {
    require(state && out, "null argument");
    *out = slater::slater_rank(state->state, tol);
  });
}

ft_status ft_pair_coefficients(const ft_state* state, double* out, size_t capacity,
                               size_t* needed) {
  return guarded([&] {
    require(state, "null argument");
    const auto dec = slater::slater_decompose(slater::coeff_matrix(state->state));
    if (needed) *needed = dec.pair_coeffs.size();
    if (out == nullptr) return;
    for (size_t i = 0; i < std::min(capacity, dec.pair_coeffs.size()); ++i) {
      out[i] = std::abs(dec.pair_coeffs[i]);
    }
  });
}

ft_status ft_concurrence_2f(const ft_state* state, double* out) {
  return guarded([&] {
    require(state && out, "null argument");
    *out = slater::concurrence_2f(state->state);
  });
}

ft_status ft_freeze(const ft_state* state, const int* site, const int* internal, size_t modes,
                    ft_pair** out) {
  return guarded([&] {
    require(state && site && internal && out, "null argument");
    fock::SitePartition partition{std::vector<int>(site, site + modes),
                                  std::vector<int>(internal, internal + modes)};
    *out = new ft_pair{fock::freeze(state->state, partition)};
  });
}

void ft_pair_free(ft_pair* pair) { delete pair; }

ft_status ft_pair_dims(const ft_pair* pair, int* d1, int* d2) {
  return guarded([&] {
    require(pair && d1 && d2, "null argument");
    *d1 = pair->pair.dim1();
    *d2 = pair->pair.dim2();
  });
}

ft_status ft_pair_amplitudes(const ft_pair* pair, double* out, size_t capacity,
                             size_t* needed) {
  return guarded([&] {
    require(pair, "null argument");
    const auto& a = pair->pair.amplitudes();
    if (needed) *needed = static_cast<size_t>(2 * a.size());
    copy_row_major(a, out, capacity);
  });
}

ft_status ft_pair_schmidt(const ft_pair* pair, double* out, size_t capacity, size_t* needed) {
  return guarded([&] {
    require(pair, "null argument");
    const auto s = slater::schmidt_decompose(pair->pair);
    if (needed) *needed = s.coefficients.size();
    if (out == nullptr) return;
    for (size_t i = 0; i < std::min(capacity, s.coefficients.size()); ++i) {
      out[i] = s.coefficients[i];
    }
  });
}

ft_status ft_pair_concurrence(const ft_pair* pair, double* out) {
  return guarded([&] {
    require(pair && out, "null argument");
    *out = slater::concurrence_2qubit(pair->pair);
  });
}

ft_status ft_pair_linear_entropy(const ft_pair* pair, int side, double* out) {
  return guarded([&] {
    require(pair && out, "null argument");
    require(side == 1 || side == 2, "side must be 1 or 2");
    *out = rdm::linear_entropy(
        rdm::reduce_bipartite(pair->pair, side == 1 ? rdm::Side::First : rdm::Side::Second));
  });
}

ft_status ft_trap_report_compute(double extent, int points, ft_trap_report* out) {
  return guarded([&] {
    require(out, "null argument");
    const auto r = trap::trap_report(trap::TrapGrid(extent, points));
    out->linear_entropy_labeled = r.linear_entropy_labeled;
    out->linear_entropy_ordered = r.linear_entropy_ordered;
    out->extent = r.extent;
    out->points = r.points;
    out->coarse_points = r.coarse_points;
    out->convergence_labeled = r.convergence_labeled;
    out->convergence_ordered = r.convergence_ordered;
  });
}

ft_status ft_trap_write_csv(double extent, int points, const char* directory) {
  return guarded([&] {
    require(directory, "null argument");
    const std::filesystem::path dir(directory);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::Io, "cannot create " + dir.string() + ": " + ec.message());
    const trap::TrapGrid grid(extent, points);
    for (auto which : {trap::Labeling::Labeled, trap::Labeling::Ordered}) {
      const auto kernel = trap::one_body_kernel(which, grid);
      const std::string tag = trap::to_string(which);
      trap::write_kernel_csv(kernel, dir / ("kernel_" + tag + ".csv"));
      trap::write_density_csv(kernel, dir / ("density_" + tag + ".csv"));
    }
  });
}

}  // extern "C"
