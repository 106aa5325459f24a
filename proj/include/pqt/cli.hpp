#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pqt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit status: 0 on success, 1 when a verification finds a
/// counterexample, 2 on usage errors. Results go to `out` unless --out names
/// a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pqt::cli
