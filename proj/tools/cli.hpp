#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclic_chroma::cli {

/// Exit codes: 0 success/valid, 1 infeasible/invalid/disagreement,
/// 2 usage/parse/resource error.
enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2 };

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace cyclic_chroma::cli
