#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace taspm {

enum ExitCode : int { kExitOk = 0, kExitData = 1, kExitUsage = 2 };

// Entry point of the `taspm` tool. `args` excludes the program name.
// Subcommands: mine, gen, stats, bench.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace taspm
