#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tilekit::cli {

/// Runs the tilekit command line. Exit status: 0 on success, 1 on validation
/// or verification failure, 2 on usage errors. Streams are injectable so
/// tests can drive the CLI in-process.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tilekit::cli
