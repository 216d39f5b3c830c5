#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graycat {

// The graycat command line without the program name. Returns 0 when every
// check holds, 1 on violations, 2 on parse, structural or usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace graycat
