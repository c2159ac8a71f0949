#ifndef TORSOR_TOOLS_CLI_HPP
#define TORSOR_TOOLS_CLI_HPP

#include <iosfwd>

namespace torsor::cli {

/// Dispatch a full command line; returns the process exit code
/// (0 success, 1 domain error, 2 usage error).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace torsor::cli

#endif
