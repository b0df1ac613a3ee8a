#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyhex::cli {

// Exit codes: 0 success, 1 malformed input or bad flags, 2 empty or
// disconnected cell set, 3 size bound exceeded.
enum ExitCode : int {
  kOk = 0,
  kMalformed = 1,
  kInvalid = 2,
  kTooLarge = 3,
};

// Runs one command line (args excludes the program name). Payload goes to
// out, diagnostics to err; cell lists are read from in when --file is absent.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace polyhex::cli
