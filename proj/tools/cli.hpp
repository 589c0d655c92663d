#ifndef GEOBRACKET_TOOLS_CLI_HPP
#define GEOBRACKET_TOOLS_CLI_HPP

#include <ostream>

#include "geobracket/error.hpp"

namespace geobracket::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kParseError = 2,
  kIdentityClass = 3,
  kNonPrimitive = 4,
  kIoError = 5,
};

int exit_code_for(ErrorKind kind) noexcept;

/// Runs one command line. Results go to `out` in a single write once the
/// command has finished; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace geobracket::cli

#endif  // GEOBRACKET_TOOLS_CLI_HPP
