#pragma once

namespace qsd::cli {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 ok, 2 usage, 3 infeasible, 4 resource budget, 5 input parse.
int run(int argc, const char* const* argv);

}  // namespace qsd::cli
