#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lcc {

// 0 success or valid, 1 negative decision or invalid certificate, 2 bad
// input, 3 internal disagreement.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitDisagreement = 3;

/// Runs the command line `args` (without the program name). `in` backs the
/// '-' input path.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lcc
