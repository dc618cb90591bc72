#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tkit {

// Runs one CLI invocation.  Exit codes: 0 success, 1 module error
// (parse/type/budget/guard/...), 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace tkit
