#ifndef QPCHAR_CLI_HPP
#define QPCHAR_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qpchar {

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_verify_failed = 1, exit_usage = 2 };

/// Runs the tool on argv[1..] (program name excluded). Results go to out,
/// diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qpchar

#endif  // QPCHAR_CLI_HPP
