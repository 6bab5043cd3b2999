#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace smp::cli {

/// Exit codes shared by every subcommand.
enum Exit : int {
    ok = 0,
    rejected = 1, ///< mathematical rejection (not SMP, tolerance exceeded, cross-check failure)
    input_error = 2,
    io_error = 3,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace smp::cli
