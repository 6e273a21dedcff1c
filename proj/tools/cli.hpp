#pragma once

namespace hiker::cli {

// Exit codes are part of the stable surface: 0 covers every well-formed
// result including negative ones (statement false, property violated),
// 2 is usage or domain errors, 3 is a blown enumeration budget, 4 is
// unreadable or malformed input files.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitParse = 4;

int run(int argc, const char* const* argv);

}  // namespace hiker::cli
