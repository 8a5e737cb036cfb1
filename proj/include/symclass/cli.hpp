#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symclass {

/// Entry point of the `symclass` tool. args[0] is the program name. Returns
/// 0 when the command ran (whatever the verdict) and 2 on usage or input
/// errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symclass
