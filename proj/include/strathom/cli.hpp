#pragma once

// The strathom command line: verbs, option parsing and report rendering.

#include <ostream>
#include <string>
#include <vector>

namespace strathom::cli {

enum ExitCode : int { Ok = 0, VerdictFailed = 1, InputFailure = 2 };

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "a..b" (inclusive) or a single integer.
std::pair<int, int> parse_range(const std::string& text, const std::string& option);

}  // namespace strathom::cli
