#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tautring::cli {

enum ExitCode : int {
  kPass = 0,
  kCheckFailed = 1,
  kUsageError = 2,
  kResourceLimit = 3,
};

/// Runs one subcommand. `args` excludes the program name. The report goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Path of the JSON schema describing reports, as shipped with the sources.
std::string schema_path();

}  // namespace tautring::cli
