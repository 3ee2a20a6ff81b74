#pragma once

#include <istream>
#include <ostream>

namespace clusterkit {

/// Runs one command-line invocation. Returns 0 on success, 1 when a check
/// comes out negative, 2 on usage or input errors.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace clusterkit
