#pragma once

#include <iosfwd>

namespace jjarray::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitNumerical = 3;

/// Runs one command line (argv[0] is the program name). Results go to `out`;
/// failures print a single `error[<kind>]: <message>` line to `err` and
/// return the matching exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jjarray::cli
