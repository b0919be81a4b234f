#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stoc::cli {

enum class Mode { densities, diff_pol, int_pol, fom, figure };
enum class Format { csv, json };

// `start:stop:count` with inclusive endpoints; `log:start:stop:count` for
// geometric spacing.
struct Grid {
  bool log = false;
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  static Grid parse(const std::string& text, const std::string& key);
  std::vector<double> values() const;
  std::string str() const;
  bool operator==(const Grid&) const = default;
};

struct RunConfig {
  Mode mode = Mode::densities;
  int figure = 0;
  double voltage = 20000.0;
  double alpha = 0.05;
  std::optional<std::pair<double, double>> alpha_band;
  Grid radius{false, 0.01, 1.0, 100};
  Grid qr{false, 0.0, 10.0, 201};
  std::string out;
  Format format = Format::csv;

  bool operator==(const RunConfig&) const = default;
};

// Bad command line or config file. `key()` names the offending flag.
class UsageError : public std::runtime_error {
 public:
  UsageError(std::string key, const std::string& what)
      : std::runtime_error(what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

// Failure while computing or writing results.
class RunError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses arguments (without the program name). A `--config <file>` holds
// `key = value` lines using the long flag names; flags on the command line
// take precedence. Throws UsageError.
RunConfig parse_config(const std::vector<std::string>& args);

// Arguments that parse_config maps back to an equal RunConfig.
std::vector<std::string> serialize(const RunConfig& config);

// Writes the tables for `config` and prints a summary to `summary`.
// Throws RunError.
void run(const RunConfig& config, std::ostream& summary);

// Full command-line entry point: returns the process exit status and prints
// a single-line `error: ...` diagnostic to `err` on failure.
int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stoc::cli
