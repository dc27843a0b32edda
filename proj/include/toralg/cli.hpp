#ifndef TORALG_CLI_HPP
#define TORALG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace toralg {

/// Dispatches one CLI invocation. Returns the process exit code:
/// 0 success, 1 domain error, 2 usage error. The JSON/CSV report goes to
/// `out` (or the path given via --output), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace toralg

#endif
