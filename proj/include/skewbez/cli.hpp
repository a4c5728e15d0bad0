#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace skewbez {

/// Runs the command-line front-end.  Exit code 0 on success, 1 on domain
/// errors, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace skewbez
