#pragma once

#include <string>
#include <vector>

#include "report.hpp"

namespace leroy::cli {

const std::vector<std::string>& suite_names();

/// Runs the named suites (all when empty); `pass` is false if any residual
/// exceeds its suite's threshold.
json run_selftest(const std::vector<std::string>& suites, int digits, bool& pass);

}  // namespace leroy::cli
