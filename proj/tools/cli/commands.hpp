#pragma once

#include <terrace/errors.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace terrace::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitValidation = 3,
  kExitVerification = 4,
  kExitIo = 5,
};

int exit_code_for(ErrorCode code);

/// Runs one command line (without the program name) and returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace terrace::cli
