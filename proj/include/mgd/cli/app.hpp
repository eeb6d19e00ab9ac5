#ifndef MGD_CLI_APP_HPP
#define MGD_CLI_APP_HPP

#include <iosfwd>

namespace mgd::cli {

// The mgd command line. Returns the process exit code: 0 success,
// 1 runtime or computation error, 2 usage or configuration error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mgd::cli

#endif  // MGD_CLI_APP_HPP
