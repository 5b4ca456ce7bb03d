/* Command-line front end: range sweeps (verify), single-prime inspection
   (inspect), and class-number reports (classnum). Exposed as a function so
   tests can drive it in-process. */
#ifndef QWILSON_CLI_HPP
#define QWILSON_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qwilson {

// Runs the tool on the given arguments (program name excluded).
// Returns 0 when every applicable check passed, 1 when any check failed
// (or an internal error interrupted a run), 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qwilson

#endif
