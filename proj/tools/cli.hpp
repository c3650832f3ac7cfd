#pragma once

#include <iosfwd>

namespace hhverify::cli {

/// Parses argv, runs the selected subcommand and returns the process exit code
/// (0 pass, 2 violation or mismatch, 1 configuration or I/O failure).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hhverify::cli
