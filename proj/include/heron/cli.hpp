#pragma once

#include <ostream>

namespace heron::cli {

/// Exit codes: 0 success, 1 failed check or I/O error, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace heron::cli
