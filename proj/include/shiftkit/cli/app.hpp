#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "shiftkit/field.hpp"

namespace shiftkit::cli {

/// Exit codes shared by every command.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitViolation = 2,
};

/// Parses `--matrix` values: "generic", "block:k,l" or "explicit:<file>".
/// Throws std::invalid_argument on malformed input.
MatrixSpec parse_matrix_spec(const std::string& text, std::uint64_t seed);

/// Whitespace-separated integer rows with '#' comments.
ExplicitSpec parse_explicit_matrix(const std::string& text);

/// Runs `shiftkit shift|op|verify|explore ...`; args[0] is the program name.
int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace shiftkit::cli
