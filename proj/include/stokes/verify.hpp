#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stokes {

struct VerifyOptions {
  // Added to the first raising-operator coefficient of every space before the
  // algebra checks run. Nonzero values must make the suite fail.
  double ladder_perturbation = 0.0;
};

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

// One "PASS|FAIL name: detail" line per check; returns true iff all passed.
bool print_verification(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace stokes
