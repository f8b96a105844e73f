#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dkanon/models.hpp"

namespace dkanon::cli {

enum class TwinMode { Off, Report, TwinUnique };
enum class Format { Json, Csv };

/// Fully resolved invocation. Exactly one of input_path / model is set.
struct RunConfig {
  std::string command;  // stats | dk | cascade | twins | sweep
  std::optional<std::string> input_path;
  std::optional<ModelSpec> model;
  std::vector<std::size_t> d_values{1, 2};
  std::size_t k_max = 5;
  std::size_t levels = kExhaust;
  TwinMode twins = TwinMode::Off;
  bool giant = false;
  Format format = Format::Json;
  std::optional<std::string> output_path;
  std::optional<std::string> sweep_config;
  unsigned threads = 0;
};

/// Bad flags or an inconsistent combination.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses argv (argv[0] is the program name). Throws UsageError. Returns
/// nullopt when help was requested and printed to `out`.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out);

/// Executes a validated config, writing the report to `out` unless an
/// output path is set. Errors are written to `err` as a single JSON object.
/// Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by run, with usage errors reported like run's.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Effective configuration as written into every JSON report.
nlohmann::json config_json(const RunConfig& config);

}  // namespace dkanon::cli
