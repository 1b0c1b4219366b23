#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lpi::text {

// Exit codes: 0 holds or success, 1 counterexample, 2 usage or
// precondition error. The JSON report goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpi::text
