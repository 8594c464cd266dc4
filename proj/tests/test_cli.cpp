// Copyright 2026 The fermitangle Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "process.hpp"

using fermitangle::testing::quote;
using fermitangle::testing::run_cli;
using nlohmann::json;

namespace fs = std::filesystem;

namespace {

const fs::path kData = FERMITANGLE_DATA_DIR;

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string write_file(const fs::path& path, const std::string& text) {
  std::ofstream(path) << text;
  return path.string();
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json analyze_json(const std::string& args) {
  const auto r = run_cli("analyze " + args + " --json");
  REQUIRE(r.exit_code == 0);
  return json::parse(r.out);
}

double phi0(double u) { return std::pow(std::numbers::pi, -0.25) * std::exp(-u * u / 2); }
double phi1(double u) { return std::sqrt(2.0) * u * phi0(u); }

}  // namespace

TEST_CASE("analyze the shipped example states") {
  const auto sd = analyze_json(quote((kData / "slater-AB.json").string()) + " --all");
  REQUIRE(sd["bipartitions"].size() == 1);
  CHECK(sd["bipartitions"][0]["verdict"] == "NonEntangled");
  CHECK(std::abs(sd["bipartitions"][0]["purity"].get<double>() - 0.5) < 1e-12);
  CHECK(sd["slater_rank"] == 1);

  const auto ent = analyze_json(quote((kData / "non-slater-AB.json").string()));
  const auto& b = ent["bipartitions"][0];
  CHECK(b["verdict"] == "Entangled");
  CHECK(std::abs(b["purity"].get<double>() - 0.25) < 1e-12);
  CHECK(std::abs(b["fermionic_concurrence"].get<double>() - 1.0) < 1e-12);
  CHECK(ent["slater_rank"] == 2);
  CHECK(std::abs(ent["concurrence_2f"].get<double>() - 1.0) < 1e-12);
  CHECK(std::abs(ent["freeze"]["concurrence_2qubit"].get<double>() - 1.0) < 1e-12);

  const auto rnd = analyze_json(quote((kData / "random-slater.json").string()) + " --all");
  REQUIRE(rnd["bipartitions"].size() == 2);
  for (const auto& bp : rnd["bipartitions"]) {
    CHECK(bp["verdict"] == "NonEntangled");
    CHECK(bp["purity"].get<double>() <= bp["upper_bound"].get<double>() + 1e-8);
    CHECK(bp["purity"].get<double>() >= bp["lower_bound"].get<double>() - 1e-8);
  }
}

TEST_CASE("human-readable report") {
  const auto r = run_cli("analyze " + quote((kData / "non-slater-AB.json").string()));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verdict=Entangled") != std::string::npos);
  CHECK(r.out.find("slater_rank=2") != std::string::npos);
}

TEST_CASE("analyze exit codes") {
  TempDir dir("fermitangle_cli_exit");
  const auto sd = quote((kData / "slater-AB.json").string());
  CHECK(run_cli("analyze " + sd + " --bipartition 2").exit_code == 4);
  CHECK(run_cli("analyze " + sd + " --bipartition 0").exit_code == 4);
  CHECK(run_cli("analyze " + quote(write_file(dir.path / "bad.json", "{\"d\": 4"))).exit_code == 2);
  CHECK(run_cli("analyze " + quote(write_file(dir.path / "schema.json",
                                              R"({"d":4,"N":2,"amplitudes":[{"modes":[2,1],"re":1}]})")))
            .exit_code == 2);
  CHECK(run_cli("analyze " + quote((dir.path / "missing.json").string())).exit_code == 2);
  CHECK(run_cli("analyze " + quote(write_file(dir.path / "norm.json",
                                              R"({"d":4,"N":2,"amplitudes":[{"modes":[0,1],"re":1.01}]})")))
            .exit_code == 3);
  // Within 1e-6 the state is renormalized and accepted.
  CHECK(run_cli("analyze " + quote(write_file(dir.path / "close.json",
                                              R"({"d":4,"N":2,"amplitudes":[{"modes":[0,1],"re":1.0000004}]})")))
            .exit_code == 0);
  CHECK(run_cli("frobnicate").exit_code == 1);
}

TEST_CASE("examples are deterministic") {
  TempDir a("fermitangle_cli_ex_a"), b("fermitangle_cli_ex_b"), c("fermitangle_cli_ex_c");
  REQUIRE(run_cli("examples " + quote(a.path.string())).exit_code == 0);
  REQUIRE(run_cli("examples " + quote(b.path.string())).exit_code == 0);
  for (const char* f : {"slater-AB.json", "non-slater-AB.json", "random-slater.json"}) {
    CHECK(slurp(a.path / f) == slurp(b.path / f));
    CHECK(slurp(a.path / f) == slurp(kData / f));
  }
  REQUIRE(run_cli("examples " + quote(c.path.string()), "FERMITANGLE_SEED=7").exit_code == 0);
  CHECK(slurp(c.path / "random-slater.json") != slurp(a.path / "random-slater.json"));
  CHECK(json::parse(slurp(c.path / "random-slater.json"))["seed"] == 7);
  REQUIRE(run_cli("examples " + quote(c.path.string()) + " --seed 20260101", "FERMITANGLE_SEED=7")
              .exit_code == 0);
  CHECK(slurp(c.path / "random-slater.json") == slurp(a.path / "random-slater.json"));

  const auto file = write_file(a.path / "occupied", "x");
  CHECK(run_cli("examples " + quote(file)).exit_code == 5);
}

TEST_CASE("trap command") {
  const auto r = run_cli("trap --grid-points 600 --extent 6 --json");
  REQUIRE(r.exit_code == 0);
  const auto fine = json::parse(r.out);
  CHECK(std::abs(fine["linear_entropy_labeled"].get<double>() - 0.36) < 0.01);
  CHECK(std::abs(fine["linear_entropy_ordered"].get<double>() - 0.5) < 1e-3);

  const auto coarse = json::parse(run_cli("trap --grid-points 50 --extent 4 --json").out);
  CHECK(fine["convergence"].get<double>() < coarse["convergence"].get<double>());

  CHECK(run_cli("trap --grid-points 20").exit_code == 6);
  CHECK(run_cli("trap --extent 2").exit_code == 6);
}

TEST_CASE("trap kernel export") {
  TempDir dir("fermitangle_cli_kernels");
  REQUIRE(run_cli("trap --grid-points 120 --extent 6 --emit-kernels " + quote(dir.path.string()))
              .exit_code == 0);
  std::ifstream in(dir.path / "kernel_ordered.csv");
  std::string line;
  std::getline(in, line);
  CHECK(line == "u,u_prime,value");
  double worst = 0.0;
  int rows = 0;
  while (std::getline(in, line)) {
    double u, v, k;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &u, &v, &k) == 3);
    worst = std::max(worst, std::abs(k - 0.5 * (phi0(u) * phi0(v) + phi1(u) * phi1(v))));
    ++rows;
  }
  CHECK(rows == 120 * 120);
  CHECK(worst < 1e-6);
  CHECK(fs::exists(dir.path / "density_labeled.csv"));
}

TEST_CASE("freeze command") {
  TempDir dir("fermitangle_cli_freeze");
  const auto ent = run_cli("freeze " + quote((kData / "non-slater-AB.json").string()) + " --json");
  REQUIRE(ent.exit_code == 0);
  const auto e = json::parse(ent.out);
  CHECK(std::abs(e["freeze"]["concurrence_2qubit"].get<double>() - 1.0) < 1e-12);
  CHECK(std::abs(e["fermionic_concurrence"].get<double>() - 1.0) < 1e-12);

  const auto sd = json::parse(
      run_cli("freeze " + quote((kData / "slater-AB.json").string()) + " --json").out);
  CHECK(std::abs(sd["freeze"]["concurrence_2qubit"].get<double>()) < 1e-12);
  CHECK(std::abs(sd["fermionic_concurrence"].get<double>()) < 1e-6);

  const auto same_site = write_file(dir.path / "same.json",
                                    R"({"d":4,"N":2,"amplitudes":[{"modes":[0,1],"re":1}]})");
  CHECK(run_cli("freeze " + quote(same_site)).exit_code == 7);
  CHECK(run_cli("freeze " + quote((kData / "random-slater.json").string())).exit_code == 7);
  CHECK(run_cli("freeze " + quote((kData / "non-slater-AB.json").string()) + " --sites A0,A1,B0")
            .exit_code == 1);
}
