#ifndef FANFORGE_GUARD_CLI_HH
#define FANFORGE_GUARD_CLI_HH 1

#include <iosfwd>

namespace fanforge
{
    // Entry point of the fanforge tool: classify, verify, fan, tau, scan.
    // Machine output goes to out (or --output), the human summary to err.
    // Returns the process exit code; usage and input errors give 3.
    auto run_cli(int argc, const char * const * argv, std::istream & in, std::ostream & out, std::ostream & err) -> int;
}

#endif
