#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reshoreval::io {

/// Exit codes: 0 success, 1 rejected input or usage error, 2 internal failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitInternal = 2;

/// Entry point of the command-line tool. `args` excludes the program name.
/// Reports go to `out` (or the --out file), diagnostics and warnings to `err`.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reshoreval::io
