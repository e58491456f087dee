#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mce::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
/// bench saw different clique counts from different algorithms.
inline constexpr int kExitCorrectness = 3;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics only to `err`; "-" as an input path reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace mce::cli
