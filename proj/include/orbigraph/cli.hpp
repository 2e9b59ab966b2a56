#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbigraph::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,           // success / valid / good
  kInvalid = 1,      // input violates the orbigraph axioms
  kIoError = 2,      // unreadable file, syntax error, bad usage
  kBad = 3,          // orbigraph is bad
  kNotEquitable = 4, // partition is not equitable
};

// Runs the command line `args` (without the program name), writing to the
// given streams. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbigraph::cli
