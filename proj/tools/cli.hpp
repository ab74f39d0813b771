#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rvc::cli {

// Exit codes shared by all subcommands.
inline constexpr int kOk = 0;
inline constexpr int kCounterexample = 1;  // verify: failing pair; table: disagreement
inline constexpr int kParseError = 2;      // also usage errors and dimension mismatch
inline constexpr int kPrecondition = 3;    // also oracle over budget
inline constexpr int kConstructionFailed = 4;
inline constexpr int kInconclusive = 5;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rvc::cli
