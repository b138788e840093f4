#ifndef BRAUERQ_CLI_HPP
#define BRAUERQ_CLI_HPP

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "brauerq/numfield.hpp"

namespace brauerq {

inline constexpr const char* kToolVersion = "0.3.0";
inline constexpr const char* kReportSchema = "brauerq-report/1";

enum ExitCode : int { kExitDefinite = 0, kExitUsage = 1, kExitInconclusive = 2 };

/// `key = value` lines; `#` starts a comment. Recognised keys: bound, seed,
/// cache, field.NAME (a polynomial) and field.NAME.flags (trusted flags).
struct Config {
  std::map<std::string, std::string> values;

  static Config parse(const std::string& text);
  static Config load(const std::filesystem::path& path);
  const std::string* get(const std::string& key) const;
};

/// Default splitting-cache location: $XDG_DATA_HOME/brauerq/splitting.cache,
/// else ~/.local/share/brauerq/splitting.cache; empty when neither is known.
std::filesystem::path default_cache_path();

/// Default prime bound: BRAUER_PRIME_BOUND if set and valid, else 10^4.
u64 default_prime_bound();

/// Runs one subcommand (argv without the program name). Writes the JSON
/// report to `out` and diagnostics to `err`; returns 0 for definite
/// verdicts, 2 for unknown or inconclusive ones, 1 for usage or validation
/// errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace brauerq

#endif  // BRAUERQ_CLI_HPP
