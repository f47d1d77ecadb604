#pragma once

#include "crystalrep/crystal.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace crystalrep {

// One verification check: a named residual against a tolerance. Boolean
// checks are encoded with residual 0 or 1 against tolerance 0.5.
struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::string group;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  double max_residual() const;
  bool pass() const;
};

// Suites: group-laws, domain, rep, chain, subspaces, or all. Deterministic
// for a fixed seed. tol_override > 0 replaces every per-check tolerance,
// which is what the CLI --tol flag and CRYSTALREP_TOL feed through;
// otherwise each check keeps its own documented tolerance.
std::vector<SuiteReport> run_suites(const CrystalGroup& g, const std::string& suite,
                                    std::uint64_t seed, double tol_override = 0.0);

std::vector<std::string> suite_names();

// Stable field order, suitable for byte-for-byte comparison across runs.
// Wall clock time is reported only when with_timings is set, since it would
// break reproducibility of the default output.
nlohmann::json report_to_json(const std::vector<SuiteReport>& reports,
                              bool with_timings = false,
                              const std::vector<double>& wall_ms = {});

}  // namespace crystalrep
