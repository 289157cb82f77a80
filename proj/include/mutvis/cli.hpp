#pragma once

#include <iosfwd>

namespace mutvis {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;  // parse errors, bad ids, invalid specs
inline constexpr int kExitNotDh = 3;
inline constexpr int kExitCapExceeded = 4;
inline constexpr int kExitInternal = 5;

/// Environment variable holding the default `oracle --cap`.
inline constexpr const char* kOracleCapEnv = "MUTVIS_ORACLE_CAP";

/// Entry point shared by the executable and the tests. Writes results to
/// `out` and diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mutvis
