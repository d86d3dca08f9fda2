#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace romdom {

// Runs the command-line tool on args (program name excluded, forward order).
// Exit codes: 0 success, 1 failed checks or an invalid labeling, 2 usage or
// input error, 3 search budget exhausted.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace romdom
