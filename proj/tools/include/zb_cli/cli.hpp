#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zb::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kCheckFailed = 2,
  kLimit = 3,
};

// Runs one subcommand. `args` excludes the program name. A file argument of "-"
// reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace zb::cli
