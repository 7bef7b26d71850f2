#pragma once

#include <iosfwd>

namespace otoric {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitInputError = 2,
  kExitBudgetExceeded = 3,
  kExitOutOfClass = 4,
};

/// Entry point of the otoric tool. Reports go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace otoric
