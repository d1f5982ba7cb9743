#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace varg {

// Full command-line entry point; returns the process exit code.
// 0 = ok, 1 = input or usage error, 2 = size limit or node budget exhausted.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace varg
