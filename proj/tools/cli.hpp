#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toricschubert::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kNotToric = 3,
  kVerificationFailure = 4,
  kOracleDisagreement = 5,
};

/// Runs one command line, program name excluded. Tables get ANSI styling
/// only when `color` is set and the output is not redirected by --out.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err, bool color = false);

}  // namespace toricschubert::cli
