#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace chordkern::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kNo = 1,          // non-member, "no" answer, invalid solution, disagreement
  kInputError = 2,  // unreadable or malformed input, bad flags
  kRouted = 3,      // kernelize asked for bg-compl
  kTooLarge = 4,    // oracle budget or characterization cap exceeded
};

inline constexpr int kFormatVersion = 1;

/// 64-bit FNV-1a over raw bytes.
std::uint64_t fnv1a64(std::string_view bytes);

/// Runs one command. `args` excludes the program name. The JSON report goes
/// to `out`, the human-readable summary to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chordkern::cli
