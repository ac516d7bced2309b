#pragma once

#include <string>
#include <vector>

namespace zenith::cli {

/// Exit codes: 0 success, 2 usage, 3 input/parse failure, 4 runtime failure.
int run(const std::vector<std::string>& args);

}  // namespace zenith::cli
