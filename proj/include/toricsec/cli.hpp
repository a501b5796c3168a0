// Command line front end. Exit codes: 0 success, 2 malformed input, 3 not
// smooth, 4 hypothesis violated, 5 internal consistency failure.

#ifndef TORICSEC_CLI_HPP
#define TORICSEC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace toricsec {

enum ExitCode
{
    exit_ok = 0,
    exit_failure = 1,
    exit_input = 2,
    exit_not_smooth = 3,
    exit_hypothesis = 4,
    exit_consistency = 5,
};

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace toricsec

#endif
