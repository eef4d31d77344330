#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lian/harness.hpp"

namespace lian::cli {

/// Process exit codes.
enum ExitCode : int {
  kPathFound = 0,
  kNoPath = 1,
  kInvalidInput = 2,  ///< usage, parse, I/O or invalid-task errors
  kBudgetExhausted = 3,
  kInternalError = 4,  ///< planner returned a path that failed validation
};

/// Parses a configuration token: "lian-5", "dlian-10", "theta-la",
/// "wtheta-la" (case-insensitive; "Theta*-LA" style labels also accepted).
/// Returns nullopt for anything else.
std::optional<AlgorithmConfig> parse_config_token(std::string_view token);

/// Runs the `lian` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lian::cli
