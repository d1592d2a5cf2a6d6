#pragma once

#include <string>
#include <vector>

namespace ksa::cli {

// exit_code: 0 clean, 1 witness found or check failed, 2 usage/operational error.
// `out` carries the machine-readable payload, `err` human diagnostics.
struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Runs one invocation; `args` excludes the program name.
CommandResult run_cli(const std::vector<std::string>& args);

}  // namespace ksa::cli
