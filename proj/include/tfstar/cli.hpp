#pragma once

#include <ostream>

namespace tfstar {

/// Runs one CLI invocation. argv[0] is the program name.
/// Exit codes: 0 success, 1 usage or input error, 2 when `check` finds failures.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace tfstar
