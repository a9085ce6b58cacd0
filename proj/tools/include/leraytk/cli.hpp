#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace leraytk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDisagreement = 3;

// Runs one command line (without the program name). Reports go to `out` as
// JSON lines, the human summary and diagnostics to `err`; instance files
// named "-" or omitted are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace leraytk::cli
