#pragma once

#include <iosfwd>

namespace squidsim {

/// Entry point of the `squidsim` tool. Data goes to `out` (or --out), diagnostics to
/// `err`. Returns 0 on success, 2 on configuration errors, 3 on convergence or
/// divergence errors and 1 on any other simulation error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace squidsim
