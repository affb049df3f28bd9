#pragma once

#include <iosfwd>

namespace optforce::cli {

// Full command-line entry point: parses arguments, loads --config, applies
// flag overrides and runs. Returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace optforce::cli
