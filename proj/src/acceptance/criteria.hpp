// The acceptance suite, shared by the test binary and `surfres verify`.
#pragma once

#include <string>
#include <vector>

namespace surfres::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
};

constexpr int criterion_count = 18;

/// Runs criterion id (1-based). Exceptions become failures.
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_all();

}  // namespace surfres::acceptance
