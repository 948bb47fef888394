#ifndef MACMAHON_TOOLS_CLI_HPP
#define MACMAHON_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace macmahon::cli {

enum ExitCode : int {
  kSuccess = 0,
  kIdentityFails = 1,
  kUsageError = 2,
};

/// Runs the command line `args` (without the program name) and returns the
/// process exit status. Never throws.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace macmahon::cli

#endif // MACMAHON_TOOLS_CLI_HPP
