#ifndef SETOPT_CLI_HPP
#define SETOPT_CLI_HPP

#include <ostream>

namespace setopt::cli {

/// Exit status: 0 success, 1 validation or usage error, 2 consistency violation.
/// Errors are written to `err` as a single line "error: <kind>: <message>".
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace setopt::cli

#endif
