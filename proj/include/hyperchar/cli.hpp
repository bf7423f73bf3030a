#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperchar {

/// Command-line front end.  `args` are the arguments without the program
/// name, in natural order.  Results go to `out`, diagnostics to `err`.
/// Returns the exit code: 0 success, 1 verification failure, 2 usage error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hyperchar
