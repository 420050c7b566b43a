#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcodes::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Parsed command line. `canonical()` renders it back as arguments that
/// parse to an equal config.
struct CommandConfig {
  std::string subcommand;
  std::string family = "lucas";
  int n = 0;
  std::optional<int> p;
  std::string mode = "first";
  std::optional<int> avoid_circular_run;
  std::uint64_t max_nodes = 0;
  double max_seconds = 0.0;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::size_t witnesses = 0;
  std::string format;
  std::string output;
  bool count = false;
  std::string claim;
  std::optional<std::int64_t> n_max;
  std::optional<int> claim_n;
  std::string highlight_code;
  std::string kind = "hamming";

  std::vector<std::string> canonical_args() const;
  std::string canonical() const;

  friend bool operator==(const CommandConfig&, const CommandConfig&) = default;
};

/// Parses arguments (without the program name). Budget flags left unset fall
/// back to PCODES_MAX_NODES / PCODES_MAX_SECONDS from the environment.
/// Throws UsageError on malformed input.
CommandConfig parse_command_line(const std::vector<std::string>& args);

std::string help_text();

/// Runs a parsed or raw command; returns the process exit code.
int execute(const CommandConfig& config, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcodes::cli
