#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace moonforge::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInfeasible = 1;  // also: verify found a mismatch
inline constexpr int kUsage = 2;
inline constexpr int kInternal = 3;

// Runs one command. args excludes the program name, e.g.
// {"check", "--scores", "1,1,1"}. JSON goes to out, diagnostics to err.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace moonforge::cli
