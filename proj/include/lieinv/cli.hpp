#pragma once

// The lieinv command line, callable in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace lieinv {

inline constexpr const char* kSeedVariable = "LIEINV_SEED";

/// args excludes the program name. Exit codes: 0 success, 1 invalid input
/// or usage, 2 pipeline error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lieinv
