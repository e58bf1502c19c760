#ifndef ULRICH_CLI_HPP
#define ULRICH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ulrich {

// Runs one CLI invocation (args excludes the program name) writing the JSON
// report to `out` and diagnostics to `err`.
// Exit codes: 0 verified/pass, 1 a checked claim failed, 2 result undetermined
// (interval verdicts) or unsupported, 64 usage or invalid configuration,
// 70 internal error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ulrich

#endif
