#ifndef TRUMPING_CLI_HPP
#define TRUMPING_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "trumping/dvector.hpp"

namespace trumping::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNotFound = 3;
inline constexpr int kExitPrefilterFails = 4;
inline constexpr int kExitInconclusive = 5;

/// Whitespace-separated decimals or a JSON array. Integer-only input (or
/// force_exact) yields an exact-mode vector; negatives and non-finite
/// values are rejected.
DVector parse_vector(const std::string& text, bool force_exact = false);

/// Canonical text form: components separated by single spaces.
std::string format_vector(const DVector& v);

/// Full command dispatch; argv excludes the program name.
int run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err);

}  // namespace trumping::cli

#endif
