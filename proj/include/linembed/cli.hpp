#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linembed::cli {

enum ExitCode : int {
    kOk = 0,
    kAbsent = 1,    // not found / not embedded / no partition
    kExhausted = 2, // search or escalation budget ran out
    kInputError = 3,
};

/// Runs one command line (args[0] is the program name). Paths given as `-` read
/// from `in`; results go to `out` unless --output names a file.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace linembed::cli
