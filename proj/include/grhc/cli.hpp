#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace grhc {

// Exit codes of dispatch.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grhc
