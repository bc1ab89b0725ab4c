#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperlift::cli {

inline constexpr const char* kVersion = "0.3.0";

enum ExitCode : int { kOk = 0, kInputError = 2, kBoundExceeded = 3 };

/// Runs one subcommand. args excludes the program name. The report (or a
/// JSON error record) goes to out, or to the --out path when given;
/// diagnostics go to err.
int cmd_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperlift::cli
