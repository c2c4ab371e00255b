#ifndef DMORSE_CLI_HPP
#define DMORSE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dmorse::cli {

enum ExitCode : int {
    kSuccess = 0,
    kPropertyFailed = 1,  // a mathematical check failed; the report says which
    kUsageError = 2,      // bad arguments, capacity, unreadable or unwritable files
};

/// Runs one command. `args` excludes the program name. Reports go to `out`
/// (or to --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dmorse::cli

#endif  // DMORSE_CLI_HPP
