#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rbs {

// Process exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;         // bad flags or flag combinations
inline constexpr int kExitVerification = 3;  // numeric / data verification failure
inline constexpr int kExitIo = 4;            // unreadable, unwritable or unparsable files

// Entry point behind main(): `args` excludes the program name. Normal
// output goes to `out`, diagnostics to `err`; the return value is the
// process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace rbs
