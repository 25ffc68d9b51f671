#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sqry::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParseOrDecode = 2,
    kCapacity = 3,
    kSessionFailed = 4,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace sqry::cli
