#pragma once

#include <string>
#include <vector>

namespace fliess {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // short failure note, empty when passed
};

/// Run the exact algebraic invariant suites up to the given degree bound.
/// Randomized checks draw from a deterministic generator seeded with `seed`.
std::vector<CheckResult> run_verification(int max_degree, unsigned seed);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace fliess
