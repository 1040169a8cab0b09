#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace orehom {

// Full command surface. args excludes the program name. One report (or, for
// `example`, one document) is written to out. Exit codes: 0 every check
// passed, 1 a mathematical check failed (witness included in the report),
// 2 usage or malformed input.
int run_cli(const std::vector<std::string>& args, std::ostream& out);

}  // namespace orehom
