#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace curvecliff::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;          // parse / validation / precondition failure
inline constexpr int kExitContradiction = 3;  // internal contradiction detected
inline constexpr int kExitGuard = 4;          // enumeration guard exceeded without --heuristic

// Runs the command line (without argv[0]); reports to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curvecliff::cli
