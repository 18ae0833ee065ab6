#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oplus::cli {

/// Runs one CLI invocation (args exclude the program name) writing to the
/// given streams. Returns the process exit code: 0 success, 1 usage
/// error, 2 domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oplus::cli
