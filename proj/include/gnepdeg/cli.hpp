#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gnepdeg::cli {

// Entire command-line surface, callable in-process for tests.  `args` is the
// argument list without the program name.  Returns the process exit code:
// 0 success, 1 usage or parse error, 2 violated computation precondition,
// 3 failed selftest checks.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gnepdeg::cli
