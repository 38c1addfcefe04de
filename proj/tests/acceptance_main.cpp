#include <cstdlib>
#include <iostream>
#include <string>

#include "uhqft/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<uhqft::CriterionResult> results;
  if (argc > 1) {
    for (int a = 1; a < argc; ++a) results.push_back(uhqft::run_criterion(std::stoi(argv[a])));
  } else {
    results = uhqft::run_acceptance();
  }
  int failed = 0;
  for (const auto& r : results) {
    std::cout << uhqft::format_result(r) << '\n';
    if (!r.passed) ++failed;
  }
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria pass\n";
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
