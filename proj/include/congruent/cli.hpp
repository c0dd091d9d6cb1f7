#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace congruent {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRefused = 1; // mathematical refusal
inline constexpr int kExitUsage = 2;

/*
 * Runs one command; `args` excludes the program name. Subcommands:
 *
 *   tunnell <n> | --range A..B
 *   quad <n> [--b P/Q]
 *   cubic <n>
 *   triangles <n> --count K [--via quad|cubic|point X Y]
 *   cnm <n> <m> --height H
 *   check-identity [--samples S]
 *   verify --triangle A B C --n N | --point X Y --n N
 *
 * Global flags: --json, --cache PATH (overridden by $CONGRUENT_CACHE),
 * --approx-digits D.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace congruent
