#pragma once

#include <iosfwd>

namespace brauer {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitDataError = 2;

/// Subcommands relations, regconst, cohomology, inertial-check, verify, selftest; JSON on `out`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int cli_main(int argc, const char* const* argv);

}  // namespace brauer
