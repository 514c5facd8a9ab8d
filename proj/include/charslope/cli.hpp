#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace charslope::cli {

/// Runs the command line given without the program name. Returns the exit
/// code: 0 on success, 1 on domain errors, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace charslope::cli
