#pragma once

#include <ostream>

namespace predsim::cli {

enum ExitCode : int {
    kOk = 0,
    kLoadError = 1,
    kLookupError = 2,
    kUsageError = 64,
};

/// Entry point behind the `predsim` binary. Results go to `out` (or the
/// --output file), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace predsim::cli
