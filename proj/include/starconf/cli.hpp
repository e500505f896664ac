#ifndef STARCONF_CLI_HPP
#define STARCONF_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "starconf/hilbert_oracle.hpp"
#include "starconf/matroid.hpp"
#include "starconf/report.hpp"

namespace starconf {

enum ExitCode : int { kExitOk = 0, kExitInput = 1, kExitCap = 2, kExitInvariant = 3 };

struct RunOptions {
  std::optional<std::string> example;
  std::optional<std::string> input_file;
  std::optional<FitWindow> window;
  std::optional<std::string> cache_dir;
  bool no_cache = false;
  int threads = 0;
  std::size_t max_n = kDefaultExhaustiveCap;
  bool timings = false;
  long max_alpha = 14;
  long t_max = -1;
  bool compare_degrees = true;
};

/// Profile rows get an oracle HP only below these sizes.
inline constexpr std::size_t kProfileOracleMaxK = 6;
inline constexpr std::size_t kProfileOracleMaxN = 12;

const std::vector<std::string>& subcommand_names();

/// Throws InputError, CapExceeded, InvariantViolation.
RunReport run_command(const std::string& subcommand, const RunOptions& options);

/// Nonzero when the report records a failed check.
int report_exit_code(const RunReport& report);

/// "lo:hi"; throws InputError.
FitWindow parse_window(const std::string& text);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace starconf

#endif  // STARCONF_CLI_HPP
