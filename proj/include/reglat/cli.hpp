#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reglat {

// Command-line front end, callable in-process for tests.  Returns the exit
// code: 0 success, 1 input validation, 2 cap exceeded, 3 internal
// consistency failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reglat
