#pragma once

// Command-line front end: eval, compare, verify and table subcommands.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "kzw/types.hpp"

namespace kzw::cli {

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumeric = 2;

/// Complex literal: "a", "a+bi", "a-bi" or "bi", where a and b are decimal
/// numbers with optional sign and exponent. Throws std::invalid_argument.
Complex parse_complex(std::string_view text);

/// Comma-separated complex literals, or a real range "lin:START:STOP:N"
/// (N evenly spaced points) or "log:E0:E1:N" (N points from 10^E0 to 10^E1).
/// N = 0 yields an empty list. Throws std::invalid_argument.
std::vector<Complex> parse_list(std::string_view text);

/// True when `text` uses list or range syntax.
bool is_sweep(std::string_view text);

/// Shortest round-trip text for a complex value in the literal grammar.
std::string format_complex(Complex c);

/// Runs the command line and returns the exit status. Data goes to `out`,
/// diagnostics (and --verbose metadata) to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kzw::cli
