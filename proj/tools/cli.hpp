#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bistellar::cli {

/// Runs one command line (program name excluded); returns the process exit code.
///
/// 0 when every check performed by the verb passed, 1 on a failed check or a
/// runtime error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bistellar::cli
