#pragma once

#include <string>
#include <vector>

namespace dra::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage error.
int run(const std::vector<std::string>& args);

} // namespace dra::cli
