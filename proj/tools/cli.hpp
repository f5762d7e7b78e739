#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slicereg::cli {

/// Exit codes: 0 ok, 1 a check failed, 2 usage or parse error, 3 domain,
/// singularity or convergence error. Diagnostics go to `err` prefixed with
/// "error:".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace slicereg::cli
