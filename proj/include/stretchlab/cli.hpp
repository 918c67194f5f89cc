#pragma once

#include <ostream>

namespace stretchlab {

/// Exit codes: 0 success, 1 a checked property failed, 2 bad input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stretchlab
