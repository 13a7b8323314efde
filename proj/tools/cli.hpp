#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reflex::cli {

/// Runs one command line (program name excluded) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reflex::cli
