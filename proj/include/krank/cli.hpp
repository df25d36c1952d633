#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace krank {

/// Runs the `krank` command line. `args` excludes the program name. Output
/// is buffered and written once the command has succeeded. Returns the
/// process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace krank
