#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace conerig::cli {

enum ExitCode : int { Success = 0, FailingVerdict = 1, InputError = 2, IllConditionedExit = 3 };

/// Runs one invocation; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conerig::cli
