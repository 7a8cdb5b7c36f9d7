#pragma once

#include <ostream>

namespace sphtrace::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kSceneParse = 2,
    kIo = 3,
    kDeterminism = 4,
};

/// Entry point behind the `sphtrace` executable. Streams are injected so the
/// whole command line can be exercised in-process.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sphtrace::cli
