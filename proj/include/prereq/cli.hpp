#pragma once

#include <iosfwd>

namespace prereq::cli {

/// Process exit statuses.
enum ExitCode : int {
  kOk = 0,
  kInputNotFound = 2,
  kValidation = 3,
  kInternal = 4,
};

/// Entry point of the `prereq` command. Documents go to files or to `out`
/// (for `--out -`); diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace prereq::cli
