#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace altalg::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitProperty = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (args excludes the program name). Reports go to
/// out, usage errors to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace altalg::cli
