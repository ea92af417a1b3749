// Entry point of the command-line front end, split from main() so tests can
// drive full command lines against in-memory streams.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knotcab::cli {

// Runs one command line (args excludes argv[0]) writing results to `out`
// and diagnostics to `err`.  Returns the process exit code:
//   0  every requested check/computation succeeded
//   1  a check failed or an engine refused the computation
//   2  input errors (bad flags, unreadable files, malformed census)
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace knotcab::cli
