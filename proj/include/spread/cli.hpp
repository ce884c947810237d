#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spread::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kOutputDirEnv = "SPREAD_OUTPUT_DIR";

std::string version_string();

/// Runs one command line (args excludes the program name).
/// Exit status: 0 success, 1 a checked claim failed (lemma violation or a
/// value below f0), 2 usage or input error, 3 internal error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace spread::cli
