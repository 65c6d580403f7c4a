#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dioset {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitConstruction = 2, kExitVerification = 3 };

/// Runs one command. args excludes the program name, e.g.
/// {"construct", "--set", "0,1,2"}.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Splits "0,1,2" (whitespace around entries allowed) into decimal tokens.
std::vector<std::string> split_list(const std::string& text);

}  // namespace dioset
