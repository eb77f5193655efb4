#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lmhs {

/// Outcome of one verification check: a pass/fail flag plus the worst
/// numerical residual observed (exact integer checks report 0 on success).
struct CheckResult {
  std::string name;
  bool passed = false;
  double max_residual = 0.0;
  std::string detail;
  double seconds = 0.0;
};

/// Run the full verification suite. The seed drives every randomized check;
/// round_trip_cases sets the size of the cycle round-trip sample (the other
/// checks use their fixed protocol sizes).
std::vector<CheckResult> run_verification(std::uint64_t seed,
                                          int round_trip_cases = 100,
                                          double tol = 1e-9);

}  // namespace lmhs
