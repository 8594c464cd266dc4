// Copyright 2026 The fermitangle Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Talks to the library only through the C interface.
//
// Exit codes:
//   0 success            4 invalid subsystem size M
//   1 usage / internal   5 write failure
//   2 malformed input    6 grid too coarse
//   3 norm deviation     7 freeze not applicable (double occupancy, N != 2)

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fermitangle/fermitangle.h"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 20260101;
constexpr int kRandomModes = 6;
constexpr int kRandomParticles = 3;

enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kMalformed = 2,
  kNorm = 3,
  kBadM = 4,
  kWrite = 5,
  kCoarse = 6,
  kFreeze = 7,
};

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void die(int code, std::string message) { throw CliError{code, std::move(message)}; }

struct StateDeleter {
  void operator()(ft_state* s) const { ft_state_free(s); }
};
struct PairDeleter {
  void operator()(ft_pair* p) const { ft_pair_free(p); }
};
using StatePtr = std::unique_ptr<ft_state, StateDeleter>;
using PairPtr = std::unique_ptr<ft_pair, PairDeleter>;

/// 12 significant digits.
double sig12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_list(const std::vector<double>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += fmt(values[i]);
  }
  return out + "]";
}

ordered_json json_list(const std::vector<double>& values) {
  ordered_json out = ordered_json::array();
  for (double v : values) out.push_back(sig12(v));
  return out;
}

void check(ft_status status, int exit_code) {
  if (status != FT_OK) die(exit_code, ft_last_error());
}

StatePtr load(const std::string& path) {
  ft_state* raw = nullptr;
  const ft_status status = ft_state_load(path.c_str(), &raw);
  switch (status) {
    case FT_OK: return StatePtr(raw);
    case FT_ERR_NORM: die(kNorm, ft_last_error());
    default: die(kMalformed, ft_last_error());
  }
}

/// "A0,A1,B0,B1": leading letters name the site, trailing digits the internal
/// state. The alphabetically first site is the left one (party 1).
struct SiteSpec {
  std::vector<int> site;
  std::vector<int> internal;
  std::string text;
};

SiteSpec parse_sites(const std::string& text) {
  std::vector<std::pair<std::string, int>> entries;
  std::string token;
  auto flush = [&] {
    std::size_t split = 0;
    while (split < token.size() && std::isalpha(static_cast<unsigned char>(token[split]))) ++split;
    if (split == 0 || split == token.size()) die(kUsage, "bad site token '" + token + "'");
    for (std::size_t i = split; i < token.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(token[i]))) {
        die(kUsage, "bad site token '" + token + "'");
      }
    }
    entries.emplace_back(token.substr(0, split), std::stoi(token.substr(split)));
    token.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      token += c;
    }
  }
  flush();

  std::set<std::string> labels;
  for (const auto& e : entries) labels.insert(e.first);
  if (labels.size() != 2) die(kUsage, "site spec must name exactly two sites");
  SiteSpec spec;
  spec.text = text;
  for (const auto& [label, internal] : entries) {
    spec.site.push_back(label == *labels.begin() ? 0 : 1);
    spec.internal.push_back(internal);
  }
  return spec;
}

struct FreezeBlock {
  int d1 = 0, d2 = 0;
  std::vector<double> amplitudes;  // interleaved, row-major
  std::vector<double> schmidt;
  std::optional<double> concurrence_2qubit;
  double linear_entropy_1 = 0.0;
  double linear_entropy_2 = 0.0;
};

FreezeBlock freeze_block(ft_pair* pair) {
  FreezeBlock b;
  check(ft_pair_dims(pair, &b.d1, &b.d2), kUsage);
  std::size_t needed = 0;
  check(ft_pair_amplitudes(pair, nullptr, 0, &needed), kUsage);
  b.amplitudes.resize(needed);
  check(ft_pair_amplitudes(pair, b.amplitudes.data(), needed, &needed), kUsage);
  check(ft_pair_schmidt(pair, nullptr, 0, &needed), kUsage);
  b.schmidt.resize(needed);
  check(ft_pair_schmidt(pair, b.schmidt.data(), needed, &needed), kUsage);
  double c = 0.0;
  if (ft_pair_concurrence(pair, &c) == FT_OK) b.concurrence_2qubit = c;
  check(ft_pair_linear_entropy(pair, 1, &b.linear_entropy_1), kUsage);
  check(ft_pair_linear_entropy(pair, 2, &b.linear_entropy_2), kUsage);
  return b;
}

ordered_json freeze_json(const FreezeBlock& b, const std::string& sites) {
  ordered_json j;
  j["sites"] = sites;
  j["dims"] = {b.d1, b.d2};
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < b.d1; ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < b.d2; ++c) {
      const std::size_t k = 2 * static_cast<std::size_t>(r * b.d2 + c);
      row.push_back({{"re", sig12(b.amplitudes[k])}, {"im", sig12(b.amplitudes[k + 1])}});
    }
    rows.push_back(std::move(row));
  }
  j["amplitudes"] = std::move(rows);
  j["schmidt_coefficients"] = json_list(b.schmidt);
  j["concurrence_2qubit"] =
      b.concurrence_2qubit ? ordered_json(sig12(*b.concurrence_2qubit)) : ordered_json(nullptr);
  j["linear_entropy_party_1"] = sig12(b.linear_entropy_1);
  j["linear_entropy_party_2"] = sig12(b.linear_entropy_2);
  return j;
}

void print_freeze(const FreezeBlock& b, const std::string& sites) {
  std::cout << "freeze (" << sites << "): " << b.d1 << "x" << b.d2 << " amplitude matrix\n";
  for (int r = 0; r < b.d1; ++r) {
    std::cout << "  ";
    for (int c = 0; c < b.d2; ++c) {
      const std::size_t k = 2 * static_cast<std::size_t>(r * b.d2 + c);
      std::cout << (c ? "  " : "") << fmt(b.amplitudes[k]);
      if (b.amplitudes[k + 1] != 0.0) std::cout << (b.amplitudes[k + 1] < 0 ? "-" : "+")
                                                << fmt(std::abs(b.amplitudes[k + 1])) << "i";
    }
    std::cout << "\n";
  }
  std::cout << "  schmidt_coefficients: " << fmt_list(b.schmidt) << "\n";
  if (b.concurrence_2qubit) {
    std::cout << "  concurrence_2qubit: " << fmt(*b.concurrence_2qubit) << "\n";
  }
  std::cout << "  linear_entropy: party 1 " << fmt(b.linear_entropy_1) << ", party 2 "
            << fmt(b.linear_entropy_2) << "\n";
}

// ---- analyze ---------------------------------------------------------------

struct AnalyzeOptions {
  std::string path;
  std::optional<int> bipartition;
  bool all = false;
  double tol = 1e-8;
  bool json = false;
};

int run_analyze(const AnalyzeOptions& opt) {
  StatePtr state = load(opt.path);
  int d = 0, n = 0;
  check(ft_state_dims(state.get(), &d, &n), kUsage);
  double norm = 1.0;
  check(ft_state_input_norm(state.get(), &norm), kUsage);

  std::vector<int> ms;
  if (opt.all) {
    for (int m = 1; m <= n - 1; ++m) ms.push_back(m);
    if (ms.empty()) die(kBadM, "a single fermion has no bipartition");
  } else {
    const int m = opt.bipartition.value_or(1);
    if (m < 1 || m > n - 1) {
      die(kBadM, "M=" + std::to_string(m) + " outside [1, " + std::to_string(n - 1) + "]");
    }
    ms.push_back(m);
  }

  ordered_json report;
  report["input"] = {{"path", opt.path}, {"d", d}, {"n", n}, {"norm", sig12(norm)}};
  report["tolerance"] = opt.tol;
  ordered_json parts = ordered_json::array();
  std::string text;
  text += "state: " + opt.path + "  d=" + std::to_string(d) + "  N=" + std::to_string(n) +
          "  norm=" + fmt(norm) + "\n";

  for (int m : ms) {
    ft_verdict v{};
    const ft_status status = ft_classify(state.get(), m, opt.tol, &v);
    if (status == FT_ERR_BAD_M) die(kBadM, ft_last_error());
    check(status, kUsage);
    if (v.purity > v.upper + opt.tol || v.purity < v.lower - opt.tol) {
      die(kUsage, "internal error: purity outside its own bounds");
    }
    double cf = 0.0;
    check(ft_fermionic_concurrence(state.get(), m, &cf), kUsage);
    const char* verdict = v.classification == FT_ENTANGLED ? "Entangled" : "NonEntangled";
    parts.push_back({{"m", m},
                     {"purity", sig12(v.purity)},
                     {"lower_bound", sig12(v.lower)},
                     {"upper_bound", sig12(v.upper)},
                     {"d_m", v.d_m},
                     {"verdict", verdict},
                     {"margin", sig12(v.margin)},
                     {"fermionic_concurrence", sig12(cf)}});
    text += "M=" + std::to_string(m) + "  purity=" + fmt(v.purity) + "  bounds=[" +
            fmt(v.lower) + ", " + fmt(v.upper) + "]  d_M=" + std::to_string(v.d_m) +
            "  verdict=" + verdict + "  margin=" + fmt(v.margin) + "  C_f=" + fmt(cf) + "\n";
  }
  report["bipartitions"] = std::move(parts);

  std::optional<FreezeBlock> frozen;
  const std::string default_sites = "A0,A1,B0,B1";
  if (n == 2) {
    int rank = 0;
    check(ft_slater_rank(state.get(), 1e-8, &rank), kUsage);
    std::size_t count = 0;
    check(ft_pair_coefficients(state.get(), nullptr, 0, &count), kUsage);
    std::vector<double> z(count);
    check(ft_pair_coefficients(state.get(), z.data(), count, &count), kUsage);
    report["slater_rank"] = rank;
    report["pair_coefficients"] = json_list(z);
    text += "slater_rank=" + std::to_string(rank) + "  pair_coefficients=" + fmt_list(z) + "\n";
    if (d == 4) {
      double c2f = 0.0;
      check(ft_concurrence_2f(state.get(), &c2f), kUsage);
      report["concurrence_2f"] = sig12(c2f);
      text += "concurrence_2f=" + fmt(c2f) + "\n";

      const SiteSpec spec = parse_sites(default_sites);
      ft_pair* raw = nullptr;
      if (ft_freeze(state.get(), spec.site.data(), spec.internal.data(), spec.site.size(), &raw) ==
          FT_OK) {
        PairPtr pair(raw);
        frozen = freeze_block(pair.get());
      }
    }
  }
  if (frozen) report["freeze"] = freeze_json(*frozen, default_sites);

  if (opt.json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << text;
    if (frozen) print_freeze(*frozen, default_sites);
  }
  return kOk;
}

// ---- examples --------------------------------------------------------------

int run_examples(const std::string& outdir, std::optional<std::uint64_t> seed_flag) {
  std::uint64_t seed = kDefaultSeed;
  if (const char* env = std::getenv("FERMITANGLE_SEED")) {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') die(kUsage, "FERMITANGLE_SEED must be an unsigned integer");
    seed = parsed;
  }
  if (seed_flag) seed = *seed_flag;

  std::error_code ec;
  std::filesystem::create_directories(outdir, ec);
  if (ec) die(kWrite, "cannot create " + outdir + ": " + ec.message());

  const std::filesystem::path dir(outdir);
  for (const char* name : {"slater-AB", "non-slater-AB"}) {
    ft_state* raw = nullptr;
    check(ft_state_named(name, &raw), kUsage);
    StatePtr state(raw);
    const std::string path = (dir / (std::string(name) + ".json")).string();
    check(ft_state_save(state.get(), path.c_str()), kWrite);
    std::cout << "wrote " << path << "\n";
  }
  ft_state* raw = nullptr;
  check(ft_state_random_slater(kRandomModes, kRandomParticles, seed, &raw), kUsage);
  StatePtr random(raw);
  const std::string path = (dir / "random-slater.json").string();
  check(ft_state_save(random.get(), path.c_str()), kWrite);
  std::cout << "wrote " << path << " (seed " << seed << ")\n";
  return kOk;
}

// ---- trap ------------------------------------------------------------------

struct TrapOptions {
  int points = 600;
  double extent = 6.0;
  std::string emit_dir;
  bool json = false;
};

int run_trap(const TrapOptions& opt) {
  if (opt.points < 50 || opt.extent < 4.0) {
    die(kCoarse, "grid too coarse: need --grid-points >= 50 and --extent >= 4");
  }
  ft_trap_report r{};
  ft_status status = ft_trap_report_compute(opt.extent, opt.points, &r);
  if (status == FT_ERR_GRID_TOO_COARSE) die(kCoarse, ft_last_error());
  check(status, kUsage);
  if (!opt.emit_dir.empty()) {
    status = ft_trap_write_csv(opt.extent, opt.points, opt.emit_dir.c_str());
    if (status == FT_ERR_IO) die(kWrite, ft_last_error());
    if (status == FT_ERR_GRID_TOO_COARSE) die(kCoarse, ft_last_error());
    check(status, kUsage);
  }

  if (opt.json) {
    ordered_json j;
    j["extent"] = sig12(r.extent);
    j["grid_points"] = r.points;
    j["coarse_grid_points"] = r.coarse_points;
    j["linear_entropy_labeled"] = sig12(r.linear_entropy_labeled);
    j["linear_entropy_ordered"] = sig12(r.linear_entropy_ordered);
    j["convergence_labeled"] = sig12(r.convergence_labeled);
    j["convergence_ordered"] = sig12(r.convergence_ordered);
    j["convergence"] = sig12(std::max(r.convergence_labeled, r.convergence_ordered));
    if (!opt.emit_dir.empty()) j["kernel_directory"] = opt.emit_dir;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "grid: L=" << fmt(r.extent) << "  n=" << r.points << "  (refinement check n="
              << r.coarse_points << ")\n";
    std::cout << "S_L labeled (particle 1):  " << fmt(r.linear_entropy_labeled)
              << "  +/- " << fmt(r.convergence_labeled) << "\n";
    std::cout << "S_L ordered (left particle): " << fmt(r.linear_entropy_ordered)
              << "  +/- " << fmt(r.convergence_ordered) << "\n";
    if (!opt.emit_dir.empty()) std::cout << "kernels written to " << opt.emit_dir << "\n";
  }
  return kOk;
}

// ---- freeze ----------------------------------------------------------------

int run_freeze(const std::string& path, const std::string& sites, bool as_json) {
  StatePtr state = load(path);
  int d = 0, n = 0;
  check(ft_state_dims(state.get(), &d, &n), kUsage);
  if (n != 2) die(kFreeze, "freeze needs a two-fermion state (N=" + std::to_string(n) + ")");
  const SiteSpec spec = parse_sites(sites);
  if (static_cast<int>(spec.site.size()) != d) {
    die(kUsage, "site spec lists " + std::to_string(spec.site.size()) + " modes, state has " +
                    std::to_string(d));
  }
  ft_pair* raw = nullptr;
  const ft_status status =
      ft_freeze(state.get(), spec.site.data(), spec.internal.data(), spec.site.size(), &raw);
  if (status == FT_ERR_DOUBLE_OCCUPANCY || status == FT_ERR_UNSUPPORTED_N) {
    die(kFreeze, ft_last_error());
  }
  check(status, kUsage);
  PairPtr pair(raw);
  const FreezeBlock block = freeze_block(pair.get());

  double cf = 0.0;
  check(ft_fermionic_concurrence(state.get(), 1, &cf), kUsage);
  std::optional<double> c2f;
  double value = 0.0;
  if (ft_concurrence_2f(state.get(), &value) == FT_OK) c2f = value;

  if (as_json) {
    ordered_json j;
    j["input"] = {{"path", path}, {"d", d}, {"n", n}};
    j["freeze"] = freeze_json(block, spec.text);
    j["fermionic_concurrence"] = sig12(cf);
    j["concurrence_2f"] = c2f ? ordered_json(sig12(*c2f)) : ordered_json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else {
    print_freeze(block, spec.text);
    std::cout << "fermionic_concurrence: " << fmt(cf) << "\n";
    if (c2f) std::cout << "concurrence_2f: " << fmt(*c2f) << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement analysis of pure states of identical fermions"};
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto* cmd_analyze = app.add_subcommand("analyze", "classify a state file by reduced purity");
  cmd_analyze->add_option("path", analyze.path, "state file (JSON)")->required();
  auto* bip = cmd_analyze->add_option("--bipartition", analyze.bipartition,
                                      "subsystem size M (default 1)");
  auto* all = cmd_analyze->add_flag("--all", analyze.all, "every M in [1, N-1]");
  bip->excludes(all);
  cmd_analyze->add_option("--tol", analyze.tol, "purity tolerance")->capture_default_str();
  cmd_analyze->add_flag("--json", analyze.json, "machine-readable output");

  std::string outdir;
  std::optional<std::uint64_t> seed;
  auto* cmd_examples = app.add_subcommand("examples", "write built-in example state files");
  cmd_examples->add_option("outdir", outdir, "output directory")->required();
  cmd_examples->add_option("--seed", seed, "seed for the random Slater determinant");

  TrapOptions trap;
  auto* cmd_trap = app.add_subcommand("trap", "two hard-core particles in a harmonic trap");
  cmd_trap->add_option("--grid-points", trap.points, "quadrature nodes")->capture_default_str();
  cmd_trap->add_option("--extent", trap.extent, "half-width L of [-L, L]")->capture_default_str();
  cmd_trap->add_option("--emit-kernels", trap.emit_dir, "directory for kernel/density CSVs");
  cmd_trap->add_flag("--json", trap.json, "machine-readable output");

  std::string freeze_path;
  std::string sites = "A0,A1,B0,B1";
  bool freeze_json_flag = false;
  auto* cmd_freeze = app.add_subcommand("freeze", "map a two-site fermion pair to labeled parties");
  cmd_freeze->add_option("path", freeze_path, "state file (JSON)")->required();
  cmd_freeze->add_option("--sites", sites, "mode labels, e.g. A0,A1,B0,B1")->capture_default_str();
  cmd_freeze->add_flag("--json", freeze_json_flag, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*cmd_analyze) return run_analyze(analyze);
    if (*cmd_examples) return run_examples(outdir, seed);
    if (*cmd_trap) return run_trap(trap);
    if (*cmd_freeze) return run_freeze(freeze_path, sites, freeze_json_flag);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  }
  return kUsage;
}
