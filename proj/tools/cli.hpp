#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skewdyck::cli {

/// Runs one command line (args excludes the program name). Payload goes to
/// out, diagnostics to err. Returns 0 on success, 1 when a requested check
/// fails, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewdyck::cli
