#ifndef MTSPACE_CLI_HPP
#define MTSPACE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace mts {

/// Runs one CLI invocation (args exclude the program name) writing results
/// to `out` and diagnostics to `err`.
///
/// Exit codes: 0 success / positive verdict; 1 negative verdict on yes-no
/// queries (and absent results); 2 usage, parse or precondition errors;
/// 3 resource-budget refusals.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mts

#endif
