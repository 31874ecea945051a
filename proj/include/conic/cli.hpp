#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace conic {

enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitInputError = 2,
};

/// Fault injection for tests; no command-line spelling reaches these.
struct CliHooks {
  /// oracle: negate the analyzer's verdicts before comparing.
  bool corrupt_oracle_expectation = false;
  /// reproduce: flip the first expectation of every corpus entry.
  bool corrupt_corpus_expectation = false;
};

/// args excludes the program name. Returns one of ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliHooks& hooks = {});

}  // namespace conic
