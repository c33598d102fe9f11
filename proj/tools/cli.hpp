#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dcrit::cli {

// Exit status taxonomy shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailed = 1;  // ran, but a checked property is false
inline constexpr int kExitUsage = 2;           // bad flags, unreadable input, IO failure

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dcrit::cli
