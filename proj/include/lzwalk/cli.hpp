#ifndef LZWALK_CLI_HPP
#define LZWALK_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lzwalk/coin.hpp"
#include "lzwalk/errors.hpp"
#include "lzwalk/genfun.hpp"

namespace lzwalk::cli {

enum class Mode { evolve, series, edge, sweep, verify };
enum class OutputFormat { csv, json };

/// Invalid configuration or usage; exit status 1.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Output could not be written; exit status 3.
class IoError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;
inline constexpr int kExitIo = 3;

struct RunConfig {
  Mode mode = Mode::evolve;

  // Exactly one of these selects the tunneling probability (evolve, series, edge).
  std::optional<double> p;
  std::optional<double> field;
  double fbar = 1.0;
  double beta = 0.0;
  double gamma = 0.0;
  double gamma_tilde = 0.0;
  double length = 1.0;
  double j0 = 1.0;
  double e0 = 1.0;

  int steps = 200;
  int max_steps = 100'000;
  int series_order = static_cast<int>(kDefaultSeriesOrder);
  int sites = 8;               // series mode: sites 0..sites
  std::vector<int> snapshots;  // evolve mode; empty selects the default set

  double f_min = 0.5;
  double f_max = 6.0;
  int points = 111;
  bool log_grid = false;

  int tau_max = 12;              // verify: path-sum horizon
  double unitarity_tol = 1e-11;  // verify: allowed norm drift

  std::string out;  // empty writes to standard output
  OutputFormat format = OutputFormat::csv;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);
std::string_view to_string(OutputFormat format);
OutputFormat parse_format(std::string_view text);

/// Apply `key = value` lines to `base`. Blank lines and lines starting with '#' are
/// ignored; unknown keys and malformed values throw ConfigError.
RunConfig parse_config(std::string_view text, RunConfig base = {});
RunConfig load_config_file(const std::string& path, RunConfig base = {});

/// Every field as `key = value` lines, readable by parse_config.
std::string emit_config(const RunConfig& config);

/// Throws ConfigError when the configuration is inconsistent for its mode.
void validate(const RunConfig& config);

/// Physical parameters for evolve/series/edge runs.
ModelParams model_params(const RunConfig& config);

/// Snapshot times for evolve mode: the explicit list, or {0, tau/4, tau/2, 3tau/4, tau}
/// rounded down to even integers.
std::vector<int> snapshot_times(const RunConfig& config);

/// Field values of the sweep grid in order.
std::vector<double> sweep_grid(const RunConfig& config);

/// Fixed-width 17-significant-digit rendering used for every real in CSV output.
std::string format_real(double value);

void run_evolve(const RunConfig& config, std::ostream& out);
void run_series(const RunConfig& config, std::ostream& out);
void run_edge(const RunConfig& config, std::ostream& out);
void run_sweep(const RunConfig& config, std::ostream& out);
/// Returns true when every check passes.
bool run_verify(const RunConfig& config, std::ostream& out);

/// Validate, run the selected mode and write to config.out (or `fallback`). Returns the
/// process exit status.
int execute(const RunConfig& config, std::ostream& fallback, std::ostream& errors);

}  // namespace lzwalk::cli

#endif  // LZWALK_CLI_HPP
