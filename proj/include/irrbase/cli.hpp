#pragma once

#include <ostream>

namespace irrbase::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInvalidInput = 2, kGuardRefused = 3 };

/// Runs the command line; JSON goes to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace irrbase::cli
