#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nestplan::cli {

enum ExitCode : int { kOk = 0, kValidationFailure = 1, kUsage = 2 };

/// Runs one command line (without the program name). `in` backs the "-"
/// input path; results go to `out` unless --out is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nestplan::cli
