#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fsrel {

// Exit codes of the command-line front end.
enum ExitCode : int { exit_ok = 0, exit_validation = 2, exit_internal = 3 };

// Runs one command (args excludes the program name). The JSON result goes to
// `out`; a JSON error object goes to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace fsrel
