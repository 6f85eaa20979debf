#pragma once

#include <atomic>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace gmstd::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kVerificationFailure = 2,
  kInterrupted = 3,
  kWitnessFound = 4,
};

struct CommandResult {
  std::string command;     // e.g. "witness sx"
  nlohmann::json inputs;   // parsed arguments, including generated seeds
  nlohmann::json output;   // structured payload, or {"error": ...}
  int exit_code = kOk;
};

struct DispatchOptions {
  /// Polled by long-running commands (prove); set from a signal handler.
  const std::atomic<bool>* stop = nullptr;
};

/// Runs one command line (program name excluded). Human-readable text goes
/// to `out` unless --json is given, in which case `out` receives a single
/// JSON document {command, inputs, output, exit_code}. Diagnostics go to
/// `err`.
CommandResult dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                       const DispatchOptions& options = {});

}  // namespace gmstd::cli
