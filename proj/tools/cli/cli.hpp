#pragma once

#include <iosfwd>

namespace rovib::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailed = 1;
inline constexpr int kExitNoBoundState = 2;
inline constexpr int kExitUnknownMolecule = 3;
inline constexpr int kExitUsage = 64;

/// Parses arguments, runs one subcommand and returns the process exit code.
/// Tables go to `out` (or the --out file), warnings and errors to `err`.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace rovib::cli
