#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orpoly::cli {

/// Process exit codes, one per failure class.
enum ExitCode : int {
  kOk = 0,
  kBoundViolation = 1,  ///< a run finished but an asserted bound failed
  kUsage = 2,           ///< unknown subcommand or malformed/missing flags
  kInvalidInput = 3,    ///< parameters outside their domain, unreadable input files
  kInternal = 4,
};

const char* tool_version();

/// Environment variable overriding the exhaustive-enumeration limit.
inline constexpr const char* kLimitEnv = "ORPOLY_EXHAUSTIVE_LIMIT";

/// Entry point of the `orpoly` tool. args excludes the program name. Reports
/// go to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orpoly::cli
