#ifndef FREEFAM_TOOLS_CLI_HPP
#define FREEFAM_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace freefam::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitValidation = 2;

/// Runs one subcommand. `args` excludes the program name. Results go to
/// `out`; a one-line diagnostic goes to `err` on failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace freefam::cli

#endif  // FREEFAM_TOOLS_CLI_HPP
