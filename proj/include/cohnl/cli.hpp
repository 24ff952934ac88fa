#pragma once

#include <string>
#include <vector>

namespace cohnl::cli {

/// Exit codes: 0 success, 1 input or usage error, 2 certificate not
/// violated while --expect-violation was given.
struct Outcome {
  int exit_code = 0;
  std::string out;  // text destined for standard output
  std::string err;  // diagnostics destined for standard error
};

/// Runs one invocation; args excludes the program name.
Outcome run(const std::vector<std::string>& args);

}  // namespace cohnl::cli
