#pragma once

// Command-line front end, callable in-process for tests.
//
//   pq5g run --config PATH --out PATH
//   pq5g attack NAME --trace PATH [attack flags] [--out PATH]
//   pq5g cost --bits N
//
// Exit codes: 0 ok, 1 I/O failure, 2 usage, 3 config, 4 missing evidence.

#include <iosfwd>
#include <string>
#include <vector>

namespace pq5g::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitConfig = 3;
inline constexpr int kExitEvidence = 4;

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pq5g::cli
