#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cofinite {

// Command dispatch behind the `cofinite` binary. Returns the process exit
// code: 0 on success, 1 on parse or domain errors (including bad usage),
// 2 on a failed self-test.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace cofinite
