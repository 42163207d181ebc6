#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dyb::cli {

/// Runs one tool invocation.  `args` excludes the program name.
/// Writes the machine-readable report (one JSON document) to `out` and a
/// human summary to `err`.  Returns 0 when all requested checks pass, 1
/// when a check fails (the report carries the witness), 2 on parse or IO
/// errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dyb::cli
