#pragma once

#include <ostream>

namespace isoptic {

/// Command-line entry point. Exit codes: 0 success, 1 oracle check above
/// tolerance, 2 usage or validation error, 3 domain or I/O error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace isoptic
