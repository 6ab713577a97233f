#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gdep::cli {

/// Runs one command line. Exit codes: 0 success, 1 diagnostics or I/O
/// failure, 2 usage error. Diagnostics go to `out`, usage errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gdep::cli
