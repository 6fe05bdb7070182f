#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wrec::cli {

enum ExitCode : int { Ok = 0, Invalid = 1, Syntax = 2, Guard = 3 };

/// Runs one `wrec` invocation. `args` excludes the program name. Documents
/// named "-" (or omitted) are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace wrec::cli
