#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewdyck/tpoly.hpp"

namespace skewdyck {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::size_t order = 16;  // half-length terms for series checks
  std::optional<std::filesystem::path> golden_dir;
  bool parallel = true;
};

/// Every cross-check between the brute-force oracle, the automaton, the
/// kernel-method series, the cubics, the recurrence, the ODE and the
/// asymptotic constants. Results are in a fixed order regardless of how the
/// checks were scheduled.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

/// Brute-force t-histograms of paths of exactly `length` steps, keyed by end
/// level (levels with no path are absent).
std::map<int, TPoly> brute_force_histograms(std::size_t length);

}  // namespace skewdyck
