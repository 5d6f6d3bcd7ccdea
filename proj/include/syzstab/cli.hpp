#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace syzstab {

/// Runs the command line (without the program name). Returns the exit code:
/// 0 on success, 1 when verify finds a failed anchor, 2 on bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace syzstab
