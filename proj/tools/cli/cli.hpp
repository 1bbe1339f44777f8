#pragma once

#include <ostream>

namespace leroy::cli {

/// Exit codes: 0 ok, 1 selftest failure, 2 bad flags, 3 evaluation error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace leroy::cli
