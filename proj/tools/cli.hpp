#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kkweyl::cli {

/// Exit codes of the command-line tool.
enum Exit : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Environment variable consulted when --max-weyl-order is not given.
inline constexpr const char* kMaxOrderEnv = "KKWEYL_MAX_WEYL_ORDER";

/// Runs one command. `args` excludes the program name. Results go to `out`;
/// warnings and errors to `err`. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kkweyl::cli
