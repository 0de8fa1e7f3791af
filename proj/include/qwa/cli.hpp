#pragma once

#include <iosfwd>

namespace qwa {

/// Entry point of the `qwa` command. Returns the process exit code:
/// 0 pass, 1 fail, 2 usage or schema error, 3 inconclusive.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qwa
