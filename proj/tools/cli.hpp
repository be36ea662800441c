#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vfc::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kInvalidInput = 2, kVerificationFailed = 3 };

inline constexpr const char* kSchema = "vecfield-census/1";

struct CommandOutcome {
  int exit_code = kSuccess;
  std::string payload;
  std::string diagnostics;
};

/// Dispatches one invocation. `args` excludes the program name. Output is
/// written as it is produced, so `enumerate` streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Buffered variant for tests.
CommandOutcome run(const std::vector<std::string>& args);

}  // namespace vfc::cli
