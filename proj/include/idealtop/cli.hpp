#pragma once

#include <ostream>

namespace idealtop::cli {

/// Exit codes.
inline constexpr int kOk = 0;           ///< holds / pass / certified
inline constexpr int kViolated = 1;     ///< violated / fail / counterexample found
inline constexpr int kUsage = 2;        ///< parse or validation error
inline constexpr int kBudget = 3;       ///< search budget exhausted

/// Runs the command line. Subcommands: eval, check, families, search, repro.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace idealtop::cli
