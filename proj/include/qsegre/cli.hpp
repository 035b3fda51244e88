#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsegre::cli {

/// Exit codes shared by every subcommand. `separable` and `oracle` use
/// kSeparable / kEntangled as a predicate; other commands return kOk.
inline constexpr int kOk = 0;
inline constexpr int kSeparable = 0;
inline constexpr int kEntangled = 1;
inline constexpr int kInputError = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qsegre::cli
