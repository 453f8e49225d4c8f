#pragma once

#include <ostream>

namespace sqk::tools {

/// Runs every reproduced example; one PASS/FAIL line each. Returns the
/// number of failures.
int run_repro(std::ostream& out);

}  // namespace sqk::tools
