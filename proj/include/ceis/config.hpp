#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ceis/ce.hpp"
#include "ceis/efficiency.hpp"
#include "ceis/estimators.hpp"

namespace ceis {

/// Everything one threshold sweep needs.
struct RunConfig {
  std::string preset;  ///< name of the preset the scenario came from, if any
  Scenario scenario;
  CEConfig ce;
  std::uint64_t n_production = 10000;
  std::uint64_t n_naive = 10000000;
  double eps0 = kDefaultAccuracy;
  double c = kDefaultConfidence;
  std::uint64_t seed = 20170101;
  unsigned workers = kDefaultWorkers;
  std::filesystem::path output_path = "outage.csv";
  bool emit_trace = false;

  /// Throws ValidationError naming the violated invariant.
  void validate() const;
};

/// Names accepted by preset_scenario.
const std::vector<std::string>& preset_names();

/// Built-in parameter sets for the two fading models at L = 2 and L = 4,
/// Es/N0 = 10 dB, thresholds -10..5 dB in 1 dB steps.
/// Throws ValidationError for an unknown name.
Scenario preset_scenario(std::string_view name);

/// Default run configuration around a preset scenario.
RunConfig preset_config(std::string_view name);

/// Default threshold grid: -10, -9, ..., 5 dB.
std::vector<double> default_threshold_grid();

/// Parses the key = value configuration format (see README). Throws
/// ParseError for syntax problems and ValidationError for bad values.
RunConfig parse_config(std::string_view text);

/// Reads and parses a configuration file.
RunConfig load_config(const std::filesystem::path& path);

}  // namespace ceis
