#ifndef TRUNCLOG_TOOLS_CLI_HPP
#define TRUNCLOG_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace trunclog::cli {

/// Runs the command line (args excludes the program name). Results go to
/// out, diagnostics and usage text to err.
/// Returns 0 when every requested check passes, 1 on any failure, 2 on a usage error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trunclog::cli

#endif  // TRUNCLOG_TOOLS_CLI_HPP
