#pragma once

#include <iosfwd>

namespace wmesc {

// Full command-line front end; the binary's main() forwards here so tests
// can drive every subcommand in-process against string streams. Returns
// the process exit code: 0 success/cover, 2 proven no-solution, 1 any
// error.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace wmesc
