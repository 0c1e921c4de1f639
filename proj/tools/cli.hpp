#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace supertube::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailure = 1;
inline constexpr int kInputError = 2;
inline constexpr int kBudgetRefusal = 3;

// Runs one command line (without the program name). Reports go to `out`
// (or --out), diagnostics to `err`; nothing is written to `out` on failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace supertube::cli
