#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chebyknot::cli {

/// Runs one command line (program name excluded). Returns 0 on success, 1 on a
/// verification mismatch, 2 on bad arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chebyknot::cli
