#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "regconn/run_config.hpp"

namespace regconn::cli {

// Process exit codes.
enum ExitCode : int {
  kPass = 0,
  kFail = 1,
  kInputError = 2,
  kCapExceeded = 3,
  kHypothesisUnmet = 4,
};

// Parses argv-style arguments (without the program name) and runs the
// command. All regular output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_analyze(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_search(const RunConfig& config, std::ostream& out);
int cmd_generate(const RunConfig& config, std::ostream& out);

}  // namespace regconn::cli
