// Built-in consistency run: the embedded-catalog regression plus every
// property suite that can be checked from the library's own functions.
#pragma once

#include <ostream>

namespace tsg {

// Prints one PASS/FAIL line per suite and returns the number of failures.
int run_selftest(std::ostream& out);

}  // namespace tsg
