#pragma once

// Command-line front end: zeros, verify, sizdc and scan subcommands.

#include <ostream>

namespace zetalab {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;        ///< numerical failure (branch tracking, I/O)
inline constexpr int certification = 2;  ///< zero count not closed, range not certified
inline constexpr int baseline = 3;       ///< frozen regression baseline exceeded
inline constexpr int hypothesis = 4;     ///< statement hypotheses fail, or t sits on a zero
inline constexpr int sizdc_violated = 5;
inline constexpr int usage = 64;         ///< bad flags, out-of-domain values, malformed input
}  // namespace exit_code

/// Runs one command line.  Never throws; every failure is reported on `err`
/// and mapped to an exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zetalab
