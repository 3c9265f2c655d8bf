#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sgcount/verify.hpp"

namespace sgcount::cli {

/// Process exit codes of the sgcount tool.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kVerifyFailed = 2,
  kResourceGuard = 3,
};

struct Hooks {
  VerifyHooks verify;
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks& hooks = {});

}  // namespace sgcount::cli
