#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spq::cli {

/// Exit codes shared by every command.
enum Exit : int {
  ok = 0,        // free / equivalent / no discrepancies
  negative = 1,  // not free / not equivalent / discrepancies found
  invalid = 2,   // malformed input or hypothesis violation
  capacity = 3,  // enumeration guard exceeded
};

/// Runs one command line (args[0] is the program name). Structured output
/// goes to `out` as JSON, human text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spq::cli
