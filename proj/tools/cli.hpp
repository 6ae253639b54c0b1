#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hkt::cli {

enum ExitCode : int { kOk = 0, kInvalidInput = 2, kCapExceeded = 3, kInternalFailure = 4 };

// args excludes the program name. Reports go to out; in text mode errors go
// to err, in JSON mode the error payload goes to out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hkt::cli
