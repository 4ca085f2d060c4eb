#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace paradot
{
//! Exit codes of the command-line front end.
enum ExitCode : int
{
    exit_pass = 0,
    exit_fail = 1,
    exit_usage = 2,
};

/*!
 * Parse arguments (without the program name), run one subcommand and write
 * its report to \c out or to the file named by --out.
 *
 * Diagnostics and the provenance line go to \c err.
 */
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace paradot
