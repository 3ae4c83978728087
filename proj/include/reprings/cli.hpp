#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reprings {

// Dispatches one subcommand invocation (argv without the program name).
// Returns the process exit code: 0 ok, 1 domain error, 2 usage error.
// Output is deterministic: canonical key order, no timestamps.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace reprings
