#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace branching::cli {

inline constexpr int kOk = 0;
inline constexpr int kValidationFailure = 1;
inline constexpr int kMalformedInput = 2;

/// Runs one command line (args excludes the program name). Analysis commands
/// print a one-line JSON report followed by a table; `gen` and `import-geo`
/// print a drawing file. Input files default to `in` when omitted or "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace branching::cli
