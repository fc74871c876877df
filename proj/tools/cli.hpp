#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace umbra::cli
{

enum ExitCode {
    exit_ok = 0,
    exit_verify_failed = 1,
    exit_usage = 2,
    exit_unwritable = 3,
};

// Runs one command line (without the program name). Regular output goes to
// out, diagnostics and verification summaries to err.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace umbra::cli
