#pragma once

#include <iosfwd>

namespace recon::cli {

enum ExitCode : int {
  kSuccess = 0,
  /// Semantically negative answer: non-member, no reconstruction, not unique.
  kNegative = 1,
  kInputError = 2,
  kResourceCap = 3,
};

/// Runs one subcommand (deck, check, witness, reconstruct, verify, survey,
/// gen). Reports go to `out` as JSON (deck files as graph6 lines),
/// diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace recon::cli
