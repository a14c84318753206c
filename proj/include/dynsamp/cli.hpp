#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dynsamp {

/// Stable exit codes; scripting against them is supported.
inline constexpr int kExitFrame = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNotFrame = 2;
inline constexpr int kExitNeverFrame = 3;
inline constexpr int kExitAmbiguous = 4;

/// Runs one dynsamp job (check | spark | construct | simulate | search).
/// args excludes the program name. JSON results go to out, diagnostics to
/// err; the return value is the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dynsamp
