#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jtheta::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kOther = 1;
inline constexpr int kUsage = 2;
inline constexpr int kDomain = 3;
inline constexpr int kConvergence = 4;
inline constexpr int kIo = 5;

/// Runs the tool on args (without the program name). Data goes to out,
/// diagnostics to err. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// As above, reading `fit --input -` from in.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace jtheta::cli
