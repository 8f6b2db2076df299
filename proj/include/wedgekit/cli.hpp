#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wedgekit::cli {

enum ExitCode : int { kOk = 0, kNo = 1, kInvalidInput = 2, kInconsistent = 3 };

/// Runs one subcommand. `args` excludes the program name. When no input
/// flags are given the request is read as a JSON object from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace wedgekit::cli
