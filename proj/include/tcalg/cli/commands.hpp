#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tcalg::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one tcalg command. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`. Returns 0 when everything passed, 1 when a
/// check failed and 2 for usage, parse and evaluation errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tcalg::cli
