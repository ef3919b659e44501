#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace frob {

// Parses and executes one command line (without the program name).  Normal
// output goes to out, usage errors to err.  Returns the process exit code:
// 0 for success (or a true answer), 1 for a mathematical failure or a false
// answer (with the witness printed), 2 for malformed input or usage.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace frob
