#ifndef MINTS_CLI_HPP
#define MINTS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mints::cli {

// Runs one CLI invocation. Exit codes: 0 success, 1 domain error
// (infeasible input where feasibility is required, inconsistent decode,
// overflow), 2 usage error (bad flags, unreadable or malformed files).
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace mints::cli

#endif  // MINTS_CLI_HPP
