#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "afl/explorer.hpp"
#include "afl/sim.hpp"

namespace afl::config {

// Parse or validation failure; what() starts with "<source>:<line>:<col>:"
// whenever the offending YAML node is known.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

sim::EnvironmentSpec parse_environment(const std::string& text,
                                       const std::string& source);
sim::EnvironmentSpec load_environment(const std::filesystem::path& path);
void write_environment(std::ostream& out, const sim::EnvironmentSpec& spec);

struct ExperimentConfig {
  std::string name = "experiment";
  std::uint64_t seed = 0;
  std::filesystem::path output_dir;  // absolute once loaded
  std::filesystem::path train_env;
  std::filesystem::path validation_env;
  std::optional<std::filesystem::path> probe_env;
  std::vector<int> seeds{0, 1, 2, 3, 4};
  std::vector<explore::ExperimentCondition> conditions;
  explore::RunSettings settings;
  explore::ValidationConfig validation;
  int affordance_resolution = 64;
  int heatmap_resolution = 40;

  // Throws ConfigError.
  void validate() const;
  const explore::ExperimentCondition* find_condition(const std::string& name) const;
};

// Relative paths resolve against `base_dir`. An AFL_OUTPUT_ROOT environment
// variable replaces the configured output directory by $AFL_OUTPUT_ROOT/<name>.
ExperimentConfig parse_experiment(const std::string& text,
                                  const std::string& source,
                                  const std::filesystem::path& base_dir);
ExperimentConfig load_experiment(const std::filesystem::path& path);

// Effective configuration with every default resolved and absolute paths.
void write_experiment(std::ostream& out, const ExperimentConfig& config);
std::string to_yaml(const ExperimentConfig& config);
bool equivalent(const ExperimentConfig& a, const ExperimentConfig& b);

}  // namespace afl::config
