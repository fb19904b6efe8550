#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace starsys::cli {

/// Process exit codes.
enum exit_code : int {
  ok = 0,
  invalid = 1,      // check found a defect
  usage = 2,        // bad arguments or unreadable input
  unsupported = 3,  // inadmissible order or no construction for it
  timeout = 4,      // a budget ran out before any exact answer
};

/// Runs one command line.  args excludes the program name.  Normal output
/// is key=value lines on `out`; failures add one "error=<kind> ..." line on
/// `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace starsys::cli
