// Copyright 2026 The fermitangle Authors
// SPDX-License-Identifier: Apache-2.0

// Exercises the shared library through its C interface only.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "fermitangle/fermitangle.h"

namespace {

struct StateHandle {
  ft_state* p = nullptr;
  ~StateHandle() { ft_state_free(p); }
};

struct PairHandle {
  ft_pair* p = nullptr;
  ~PairHandle() { ft_pair_free(p); }
};

}  // namespace

TEST_CASE("version and error string") {
  CHECK(std::strlen(ft_version()) > 0);
  StateHandle s;
  CHECK(ft_state_named("nope", &s.p) == FT_ERR_UNKNOWN_NAME);
  CHECK(s.p == nullptr);
  CHECK(std::strlen(ft_last_error()) > 0);
  CHECK(ft_state_named(nullptr, &s.p) == FT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("named states through the C interface") {
  StateHandle sd, ent;
  REQUIRE(ft_state_named("slater-AB", &sd.p) == FT_OK);
  REQUIRE(ft_state_named("non-slater-AB", &ent.p) == FT_OK);

  int d = 0, n = 0;
  CHECK(ft_state_dims(ent.p, &d, &n) == FT_OK);
  CHECK(d == 4);
  CHECK(n == 2);

  size_t needed = 0;
  CHECK(ft_state_amplitudes(ent.p, nullptr, 0, &needed) == FT_OK);
  CHECK(needed == 12);
  std::vector<double> amp(needed);
  CHECK(ft_state_amplitudes(ent.p, amp.data(), amp.size(), &needed) == FT_OK);
  CHECK(std::abs(amp[4] - 1 / std::sqrt(2.0)) < 1e-15);  // {0,3}
  CHECK(std::abs(amp[6] - 1 / std::sqrt(2.0)) < 1e-15);  // {1,2}

  std::vector<double> rho(32);
  size_t dim = 0;
  CHECK(ft_reduced_matrix(ent.p, 1, rho.data(), rho.size(), &dim) == FT_OK);
  CHECK(dim == 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      CHECK(std::abs(rho[2 * (4 * r + c)] - (r == c ? 0.25 : 0.0)) < 1e-12);
      CHECK(std::abs(rho[2 * (4 * r + c) + 1]) < 1e-12);
    }

  double p = 0.0;
  CHECK(ft_purity(sd.p, 1, &p) == FT_OK);
  CHECK(std::abs(p - 0.5) < 1e-12);

  ft_verdict v{};
  CHECK(ft_classify(ent.p, 1, 1e-8, &v) == FT_OK);
  CHECK(v.classification == FT_ENTANGLED);
  CHECK(v.d_m == 4);
  CHECK(std::abs(v.lower - 0.25) < 1e-15);
  CHECK(std::abs(v.upper - 0.5) < 1e-15);
  CHECK(ft_classify(sd.p, 1, 1e-8, &v) == FT_OK);
  CHECK(v.classification == FT_NON_ENTANGLED);
  CHECK(ft_classify(sd.p, 2, 1e-8, &v) == FT_ERR_BAD_M);

  double cf = 0.0;
  CHECK(ft_fermionic_concurrence(ent.p, 1, &cf) == FT_OK);
  CHECK(std::abs(cf - 1.0) < 1e-12);

  int rank = 0;
  CHECK(ft_slater_rank(ent.p, 1e-8, &rank) == FT_OK);
  CHECK(rank == 2);
  CHECK(ft_slater_rank(sd.p, 1e-8, &rank) == FT_OK);
  CHECK(rank == 1);

  double z[2];
  CHECK(ft_pair_coefficients(ent.p, z, 2, &needed) == FT_OK);
  CHECK(needed == 2);
  CHECK(std::abs(z[0] - 0.5) < 1e-12);
  CHECK(std::abs(z[1] - 0.5) < 1e-12);

  double c2f = 0.0;
  CHECK(ft_concurrence_2f(ent.p, &c2f) == FT_OK);
  CHECK(std::abs(c2f - 1.0) < 1e-12);
}

TEST_CASE("constructing states from amplitudes") {
  StateHandle s;
  const double good[] = {0.6, 0.0, 0.0, 0.8};
  REQUIRE(ft_state_new(2, 1, good, 4, &s.p) == FT_OK);
  double norm = 0.0;
  CHECK(ft_state_input_norm(s.p, &norm) == FT_OK);
  CHECK(std::abs(norm - 1.0) < 1e-15);

  StateHandle bad;
  const double off[] = {1.0, 0.0, 0.1, 0.0};
  CHECK(ft_state_new(2, 1, off, 4, &bad.p) == FT_ERR_NORM);
  CHECK(ft_state_new(2, 1, good, 3, &bad.p) == FT_ERR_DIMENSION_MISMATCH);
  CHECK(ft_state_parse("{", &bad.p) == FT_ERR_PARSE);
  CHECK(ft_state_load("/nonexistent/x.json", &bad.p) == FT_ERR_IO);
  CHECK(bad.p == nullptr);

  StateHandle three;
  REQUIRE(ft_state_random_slater(6, 3, 11, &three.p) == FT_OK);
  double c2f = 0.0;
  CHECK(ft_concurrence_2f(three.p, &c2f) == FT_ERR_UNSUPPORTED_DIMS);
  ft_verdict v{};
  CHECK(ft_classify(three.p, 2, 1e-8, &v) == FT_OK);
  CHECK(v.classification == FT_NON_ENTANGLED);
}

TEST_CASE("JSON round trip and seeds") {
  StateHandle a;
  REQUIRE(ft_state_random_slater(6, 3, 123, &a.p) == FT_OK);
  char* text = nullptr;
  REQUIRE(ft_state_to_json(a.p, &text) == FT_OK);
  StateHandle b;
  CHECK(ft_state_parse(text, &b.p) == FT_OK);
  ft_string_free(text);
  int has = 0;
  uint64_t seed = 0;
  CHECK(ft_state_seed(b.p, &has, &seed) == FT_OK);
  CHECK(has == 1);
  CHECK(seed == 123);

  const auto path = std::filesystem::temp_directory_path() / "fermitangle_capi_state.json";
  CHECK(ft_state_save(a.p, path.c_str()) == FT_OK);
  StateHandle c;
  CHECK(ft_state_load(path.c_str(), &c.p) == FT_OK);
  std::filesystem::remove(path);
  CHECK(ft_state_save(a.p, "/nonexistent/dir/x.json") == FT_ERR_IO);
}

TEST_CASE("freezing to a distinguishable pair") {
  StateHandle ent;
  REQUIRE(ft_state_named("non-slater-AB", &ent.p) == FT_OK);
  const int site[] = {0, 0, 1, 1};
  const int internal[] = {0, 1, 0, 1};
  PairHandle pair;
  REQUIRE(ft_freeze(ent.p, site, internal, 4, &pair.p) == FT_OK);
  int d1 = 0, d2 = 0;
  CHECK(ft_pair_dims(pair.p, &d1, &d2) == FT_OK);
  CHECK(d1 == 2);
  CHECK(d2 == 2);
  double c = 0.0;
  CHECK(ft_pair_concurrence(pair.p, &c) == FT_OK);
  CHECK(std::abs(c - 1.0) < 1e-12);
  double sch[2];
  size_t needed = 0;
  CHECK(ft_pair_schmidt(pair.p, sch, 2, &needed) == FT_OK);
  CHECK(std::abs(sch[0] - 1 / std::sqrt(2.0)) < 1e-12);
  double le = 0.0;
  CHECK(ft_pair_linear_entropy(pair.p, 2, &le) == FT_OK);
  CHECK(std::abs(le - 0.5) < 1e-12);
  CHECK(ft_pair_linear_entropy(pair.p, 3, &le) == FT_ERR_INVALID_ARGUMENT);

  // Put modes 0 and 3 on the same site: the {0,3} amplitude is a double occupancy.
  const int same[] = {0, 1, 1, 0};
  const int inner[] = {0, 0, 1, 1};
  PairHandle blocked;
  CHECK(ft_freeze(ent.p, same, inner, 4, &blocked.p) == FT_ERR_DOUBLE_OCCUPANCY);
  CHECK(ft_freeze(ent.p, site, internal, 3, &blocked.p) == FT_ERR_DIMENSION_MISMATCH);

  StateHandle three;
  REQUIRE(ft_state_random_slater(4, 3, 1, &three.p) == FT_OK);
  CHECK(ft_freeze(three.p, site, internal, 4, &blocked.p) == FT_ERR_UNSUPPORTED_N);
}

TEST_CASE("trap through the C interface") {
  ft_trap_report r{};
  REQUIRE(ft_trap_report_compute(6.0, 200, &r) == FT_OK);
  CHECK(r.points == 200);
  CHECK(std::abs(r.linear_entropy_ordered - 0.5) < 1e-3);
  CHECK(ft_trap_report_compute(1.0, 20, &r) == FT_ERR_GRID_TOO_COARSE);

  const auto dir = std::filesystem::temp_directory_path() / "fermitangle_capi_csv";
  std::filesystem::create_directories(dir);
  CHECK(ft_trap_write_csv(6.0, 50, dir.c_str()) == FT_OK);
  for (const char* f : {"kernel_labeled.csv", "kernel_ordered.csv", "density_labeled.csv",
                        "density_ordered.csv"})
    CHECK(std::filesystem::exists(dir / f));
  std::filesystem::remove_all(dir);
}
