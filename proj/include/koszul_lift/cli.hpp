#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace koszul_lift {

/// Runs one command line (args excludes the program name). Exit codes:
/// 0 all checks pass, 1 some check fails, 2 input or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace koszul_lift
