// Command line front end: classify / check / auto / table / selftest.
// Kept as a library function so tests can drive it without spawning
// processes.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tsg {

// args excludes the program name. Returns the process exit code:
// 0 success (or "realizable"), 1 not realizable / selftest failures,
// 2 usage, parse, or domain errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace tsg
