#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace contrast::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInputError = 2,     // unreadable file, decode failure, incompatible images
  kPartialFailure = 3  // some images in a batch failed
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace contrast::cli
