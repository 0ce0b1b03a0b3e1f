#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hyper::cli {

/// Runs the hgx command line. `args` excludes the program name. Returns 0 on
/// success, 1 when a validation or check fails, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyper::cli
