#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace boundgen::cli {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 success, 1 usage or input error, 2 verification failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boundgen::cli
