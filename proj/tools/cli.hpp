#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace minimalnets::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kInvalidInput = 2 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minimalnets::cli
