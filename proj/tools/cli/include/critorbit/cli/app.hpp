#pragma once

#include <ostream>
#include <string>

namespace critorbit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

inline constexpr const char* kWorkersEnv = "CRITORBIT_WORKERS";

// Parses argv (argv[0] is the program name), runs one command and writes the
// result to `out` or to the --output file. Diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace critorbit::cli
