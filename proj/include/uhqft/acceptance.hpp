#pragma once

// The acceptance suite: one pass/fail verdict per criterion, each with a
// wall-clock limit.

#include <string>
#include <vector>

namespace uhqft {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;
};

std::vector<CriterionResult> run_acceptance();
// Runs a single criterion (1-based); throws InputError for an unknown id.
CriterionResult run_criterion(int id);
int criterion_count();

std::string format_result(const CriterionResult& r);

}  // namespace uhqft
