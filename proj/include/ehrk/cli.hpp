#pragma once

#include <ostream>

namespace ehrk {

/// Parses argv and runs one subcommand. Returns 0 on success, 1 when a
/// verification reports violations, 2 on usage or input errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ehrk
