// Command dispatch for the prymcalc tool.  Kept in the library so the
// command surface is testable without spawning processes.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace prymcalc {

// Exit codes: 0 success (and report match), 1 computation or usage error,
// 2 expected-value report mismatch.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prymcalc
