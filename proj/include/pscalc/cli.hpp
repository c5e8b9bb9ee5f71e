#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pscalc::cli {

/// Environment variable naming the Bernoulli cache directory.
inline constexpr const char* kCacheEnv = "PSCALC_CACHE_DIR";
inline constexpr const char* kCacheFile = "bernoulli-ms-v1.tsv";

/// --cache-dir wins over $PSCALC_CACHE_DIR, which wins over
/// $XDG_CACHE_HOME/pscalc, then $HOME/.cache/pscalc. Empty when none resolve.
std::optional<std::filesystem::path> cache_directory(const std::string& flag_value);

/// Runs one command. `args` excludes the program name.
///
/// Exit codes: 0 success, 1 domain error (a one-line JSON error record on
/// `err`), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pscalc::cli
