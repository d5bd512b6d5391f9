#ifndef MFSLICE_CLI_HPP
#define MFSLICE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mfslice::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable consulted for the default --seed.
inline constexpr const char* kSeedVariable = "MFSLICE_SEED";

/// Runs one subcommand. Reports go to `out` (or to --output), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with the arguments following the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mfslice::cli

#endif  // MFSLICE_CLI_HPP
