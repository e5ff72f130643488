#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace starcut {

inline constexpr const char* kVersion = "1.0.0";

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitBadArguments = 2,
  kExitRange = 3,
  kExitNotACut = 4,
  kExitReportFailed = 5,
};

/// Runs one command. `args` excludes the program name. JSON payloads go to
/// `out`; diagnostics and machine-readable error objects go to `err`.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace starcut
