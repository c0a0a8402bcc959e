#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qseries::cli {

enum ExitCode : int {
    Success = 0,
    VerificationFailed = 1,
    UsageError = 2,
    EvaluationError = 3,
};

// args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, std::istream &in);

} // namespace qseries::cli
