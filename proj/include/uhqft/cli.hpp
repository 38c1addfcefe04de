#pragma once

// Command-line front end. Verbs: compute, check-axioms, adequacy, dual-check,
// selftest. Exit codes: 0 success, 1 verification failure, 2 input error.

#include <ostream>
#include <string>
#include <vector>

namespace uhqft {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInputError = 2;

// args excludes the program name.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uhqft
