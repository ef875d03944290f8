#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mdzv {

/// Runs one command. Exit status 0 on success (and verification pass),
/// 1 on verification failure or evaluation error, 2 on usage errors.
/// Results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace mdzv
