#ifndef POLYCERT_CLI_HPP
#define POLYCERT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace polycert {

// Full command dispatch, usable in-process (the binary is a thin wrapper).
// args excludes the program name. Reports go to `out` (JSON with --json),
// diagnostics to `err`.
// Exit codes: 0 certificate issued / decomposition found / run completed;
// 1 hypotheses not satisfied or no result; 2 usage or parse error;
// 3 oracle budget exceeded.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace polycert

#endif
