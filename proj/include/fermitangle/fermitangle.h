/*
 * Copyright 2026 The fermitangle Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to libfermitangle.
 *
 * Objects are opaque handles created by ft_*_new / ft_*_load functions and
 * released with the matching ft_*_free. Every fallible call returns an
 * ft_status; on failure a description of the last error on the calling thread
 * is available from ft_last_error(). Output parameters are left untouched on
 * failure.
 *
 * Array outputs follow one convention: the caller passes a buffer and its
 * capacity (in elements); the library writes min(capacity, needed) elements
 * and always reports the needed count. Complex values are interleaved
 * (re, im) pairs, and complex matrices are row-major.
 */

#ifndef FERMITANGLE_H_
#define FERMITANGLE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(FT_BUILDING_LIBRARY)
#define FT_API __attribute__((visibility("default")))
#else
#define FT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ft_status {
  FT_OK = 0,
  FT_ERR_INVALID_ARGUMENT = 1,
  FT_ERR_PARSE = 2,
  FT_ERR_NORM = 3,
  FT_ERR_BAD_M = 4,
  FT_ERR_IO = 5,
  FT_ERR_GRID_TOO_COARSE = 6,
  FT_ERR_DOUBLE_OCCUPANCY = 7,
  FT_ERR_UNSUPPORTED_N = 8,
  FT_ERR_UNSUPPORTED_DIMS = 9,
  FT_ERR_DIMENSION_MISMATCH = 10,
  FT_ERR_LINEARLY_DEPENDENT = 11,
  FT_ERR_NOT_UNITARY = 12,
  FT_ERR_UNKNOWN_NAME = 13,
  FT_ERR_NUMERICAL = 14,
  FT_ERR_INTERNAL = 15
} ft_status;

typedef struct ft_state ft_state;
typedef struct ft_pair ft_pair;

typedef enum ft_classification { FT_NON_ENTANGLED = 0, FT_ENTANGLED = 1 } ft_classification;

typedef struct ft_verdict {
  ft_classification classification;
  double purity;
  double lower;
  double upper;
  long long d_m;
  double margin;
} ft_verdict;

typedef struct ft_trap_report {
  double linear_entropy_labeled;
  double linear_entropy_ordered;
  double extent;
  int points;
  int coarse_points;
  double convergence_labeled;
  double convergence_ordered;
} ft_trap_report;

FT_API const char* ft_version(void);

/* Message for the most recent failure on this thread ("" if none). */
FT_API const char* ft_last_error(void);

FT_API void ft_string_free(char* s);

/* ---- states ------------------------------------------------------------ */

FT_API ft_status ft_state_load(const char* path, ft_state** out);
FT_API ft_status ft_state_parse(const char* json_text, ft_state** out);
/* "slater-AB" or "non-slater-AB". */
FT_API ft_status ft_state_named(const char* name, ft_state** out);
/* Interleaved amplitudes of length 2*C(d,N) in lexicographic basis order;
 * renormalized if the norm is within 1e-6 of 1. */
FT_API ft_status ft_state_new(int d, int n, const double* amplitudes, size_t len,
                              ft_state** out);
FT_API ft_status ft_state_random_slater(int d, int n, uint64_t seed, ft_state** out);
FT_API void ft_state_free(ft_state* state);

FT_API ft_status ft_state_dims(const ft_state* state, int* d, int* n);
FT_API ft_status ft_state_amplitudes(const ft_state* state, double* out, size_t capacity,
                                     size_t* needed);
/* Seed recorded in the source file, if any; *has_seed is 0 otherwise. */
FT_API ft_status ft_state_seed(const ft_state* state, int* has_seed, uint64_t* seed);
/* Norm of the amplitudes as supplied, before renormalization. */
FT_API ft_status ft_state_input_norm(const ft_state* state, double* out);
/* JSON state file text; release with ft_string_free. */
FT_API ft_status ft_state_to_json(const ft_state* state, char** out);
FT_API ft_status ft_state_save(const ft_state* state, const char* path);

/* ---- reduced states and criteria --------------------------------------- */

/* Row-major complex C(d,M) x C(d,M) matrix; *dim receives C(d,M). */
FT_API ft_status ft_reduced_matrix(const ft_state* state, int m, double* out,
                                   size_t capacity, size_t* dim);
FT_API ft_status ft_purity(const ft_state* state, int m, double* out);
FT_API ft_status ft_classify(const ft_state* state, int m, double tol, ft_verdict* out);
FT_API ft_status ft_fermionic_concurrence(const ft_state* state, int m, double* out);
FT_API ft_status ft_slater_rank(const ft_state* state, double tol, int* out);
/* Pair coefficients |z_i|, descending; floor(d/2) values. */
FT_API ft_status ft_pair_coefficients(const ft_state* state, double* out, size_t capacity,
                                      size_t* needed);
FT_API ft_status ft_concurrence_2f(const ft_state* state, double* out);

/* ---- distinguishable pairs --------------------------------------------- */

/* site[i] in {0 (left), 1 (right)}, internal[i] >= 0, for every mode i < d. */
FT_API ft_status ft_freeze(const ft_state* state, const int* site, const int* internal,
                           size_t modes, ft_pair** out);
FT_API void ft_pair_free(ft_pair* pair);
FT_API ft_status ft_pair_dims(const ft_pair* pair, int* d1, int* d2);
/* Row-major complex d1 x d2 amplitude matrix. */
FT_API ft_status ft_pair_amplitudes(const ft_pair* pair, double* out, size_t capacity,
                                    size_t* needed);
FT_API ft_status ft_pair_schmidt(const ft_pair* pair, double* out, size_t capacity,
                                 size_t* needed);
FT_API ft_status ft_pair_concurrence(const ft_pair* pair, double* out);
/* side is 1 or 2. */
FT_API ft_status ft_pair_linear_entropy(const ft_pair* pair, int side, double* out);

/* ---- harmonic trap ------------------------------------------------------ */

FT_API ft_status ft_trap_report_compute(double extent, int points, ft_trap_report* out);
/* Writes kernel_{labeled,ordered}.csv and density_{labeled,ordered}.csv. */
FT_API ft_status ft_trap_write_csv(double extent, int points, const char* directory);

#ifdef __cplusplus
}
#endif

#endif /* FERMITANGLE_H_ */
