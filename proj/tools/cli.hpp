#pragma once

// Command-line front end. Exit codes: 0 pass, 1 counterexample or failed
// assertion, 2 usage or configuration error.

#include <iosfwd>
#include <string>
#include <vector>

namespace eocong::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eocong::cli
