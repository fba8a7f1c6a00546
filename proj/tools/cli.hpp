#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "crnreduce/error.hpp"

namespace crnreduce::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_input = 1;
inline constexpr int exit_eligibility = 2;
inline constexpr int exit_validation = 3;

/// Exit status for a library error.
int exit_code(ErrorCode code);

/// Runs one command. `args` excludes the program name; a path of `-` reads
/// `in`. Documents go to `out`, diagnostics to `err` as
/// `error: <Code>: <message>`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace crnreduce::cli
