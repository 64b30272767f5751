#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace exotic::cli {

/// Dispatches the CLI subcommands. Results go to `out`, diagnostics and
/// progress to `err`. Exit codes: 0 success, 1 when a verification fails
/// or an expected-empty search comes back non-empty, 2 on invalid input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace exotic::cli
