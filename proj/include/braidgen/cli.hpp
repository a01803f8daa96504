#ifndef BRAIDGEN_CLI_HPP
#define BRAIDGEN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace braidgen::cli {

// Runs one CLI invocation (args excludes the program name). Returns the
// process exit status; all output goes to the given streams so tests can run
// commands in-process.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace braidgen::cli

#endif
