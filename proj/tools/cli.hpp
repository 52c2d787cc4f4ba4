#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ribbonball::cli {

// Runs one command. `args` excludes the program name. Exit codes: 0 success,
// 1 negative answer (no covering, invalid graph, empty search), 2 usage or
// input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace ribbonball::cli
