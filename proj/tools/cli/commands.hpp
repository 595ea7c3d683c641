#pragma once

#include <string>
#include <vector>

namespace gks::cli {

/// Exit codes: 0 success, 1 negative verdict (invalid strategy, losing
/// subgraph, no matching, rejected certificate), 2 usage or input error.
struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs one command line; `args` excludes the program name.
CommandResult run_cli(const std::vector<std::string>& args);

}  // namespace gks::cli
