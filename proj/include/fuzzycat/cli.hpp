#ifndef FUZZYCAT_CLI_HPP
#define FUZZYCAT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace fuzzycat {

/// Runs one CLI command. args excludes the program name. Returns the
/// process exit code: 0 pass/value produced, 1 violations or a failed
/// property, 2 usage or parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace fuzzycat

#endif
