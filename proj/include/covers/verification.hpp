#pragma once

#include <string>
#include <vector>

namespace covers {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

enum class VerifyLevel { Fast, Full };

/// The acceptance suite: every headline count, formula and homology claim,
/// each run at its stated size and exact tolerance.  Fast caps the cover
/// instances at n <= 6; Full adds the n = 7 cover and the gyrobipentaprism
/// consistency run.
std::vector<CheckResult> run_acceptance(VerifyLevel level);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace covers
