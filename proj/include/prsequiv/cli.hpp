#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prsequiv {

// Exit codes of the command-line tool.
inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitError = 2;

// Runs one command. args[0] is the program name. The interactive `game` command reads
// its moves from `in`.
int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);
int cli_main(int argc, const char* const* argv);

}  // namespace prsequiv
