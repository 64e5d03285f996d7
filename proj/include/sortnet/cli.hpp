#pragma once

namespace sortnet {

/// Exit codes: 0 = yes, 2 = no/maybe, 1 = error.
inline constexpr int kExitYes = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNoOrMaybe = 2;

/// The whole command-line front end (produce / preprocess / check /
/// solve). argv is the usual main() argument vector.
int run_cli(int argc, char** argv);

}  // namespace sortnet
