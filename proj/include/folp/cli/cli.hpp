#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace folp::cli {

enum ExitCode : int { kSat = 0, kUnsat = 1, kUnknown = 2, kError = 3 };

// args excludes the program name. Reads FOLP_SEED from the environment.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace folp::cli
