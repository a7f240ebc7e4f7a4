#pragma once

#include <ostream>
#include <string>
#include <vector>

// Command-line front end. Exit statuses: 0 everything passed, 1 a
// verification failed, 2 the command line did not parse, 3 a precondition
// on the inputs failed.
namespace moorekit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitPrecondition = 3;

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Splits on commas outside square brackets, trimming blanks.
std::vector<std::string> split_list(const std::string& text);

}  // namespace moorekit::cli
