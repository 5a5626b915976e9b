#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seqlogic {

// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitNegative = 1,  // NOT EQUAL, failed check, failed inversion
    kExitUsage = 2,     // parse and usage errors
    kExitGuard = 3,     // atom-occurrence guard exceeded
};

// args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace seqlogic
