#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace holescan {

/// Runs one CLI invocation (args excludes the program name). Returns the
/// process exit status: 0 on success, 1 with a one-line diagnostic on err
/// for parse, I/O and precondition failures.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace holescan
