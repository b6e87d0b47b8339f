#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "afl/data.hpp"
#include "afl/nn.hpp"
#include "afl/planner.hpp"
#include "afl/sim.hpp"
#include "afl/uncertainty.hpp"
#include "afl/world_model.hpp"

namespace afl::explore {

// Random motor babbling that keeps the previous command with probability
// `repeat_bias`, otherwise draws a fresh uniform command scaled by
// `action_scale`.
class HeuristicPolicy {
 public:
  explicit HeuristicPolicy(double repeat_bias, double action_scale = 1.0);

  sim::Action next(Rng& rng);
  void reset() { has_previous_ = false; }

 private:
  double repeat_bias_;
  double action_scale_;
  bool has_previous_ = false;
  sim::Action previous_ = sim::Action::Zero();
};

struct HeuristicConfig {
  double repeat_bias = 0.9;
  double action_scale = 1.0;
};

// One heuristic rollout of `length` timesteps from `start` at rest.
Sequence rollout_heuristic(const sim::EnvironmentSpec& spec,
                           const sim::Vec2& start, HeuristicPolicy& policy,
                           int length, double sensor_range, Rng& policy_rng,
                           Rng& noise_rng);

// Sequences start at uniformly sampled free positions with zero velocity.
std::vector<Sequence> generate_dataset(const sim::EnvironmentSpec& spec,
                                       const HeuristicConfig& policy,
                                       int num_sequences, int length,
                                       double sensor_range, Rng& rng);

enum class ValidationMode { standard, restricted };

std::string to_string(ValidationMode mode);
ValidationMode validation_mode_from_string(const std::string& text);

struct ValidationConfig {
  ValidationMode mode = ValidationMode::standard;
  int sequences = 50;
  int length = 50;
  double low_velocity_scale = 0.5;  // action scaling in restricted mode
};

// Standard: heuristic data. Restricted: low-velocity heuristic with only the
// pairs whose true position lies inside eval_region scored; sequences with
// no scored pair are dropped. Throws std::invalid_argument when restricted
// mode is requested without an eval_region.
std::vector<Sequence> build_validation(const sim::EnvironmentSpec& spec,
                                       ValidationMode mode,
                                       const ValidationConfig& config,
                                       const HeuristicConfig& heuristic,
                                       double sensor_range, Rng& rng);

// FIFO store of training sequences keyed by insertion age.
class SequenceBuffer {
 public:
  explicit SequenceBuffer(std::size_t capacity);

  std::size_t size() const { return sequences_.size(); }
  std::size_t capacity() const { return capacity_; }
  std::span<const Sequence> sequences() const { return sequences_; }
  std::span<const std::uint64_t> ages() const { return ages_; }
  std::uint64_t oldest_age() const;

  // Appends; throws std::length_error once full.
  void add(Sequence s);

  // Evicts the incoming.size() oldest entries, then appends `incoming`.
  // Returns the number evicted.
  std::size_t replace_oldest(std::vector<Sequence> incoming);

 private:
  std::size_t capacity_;
  std::uint64_t next_age_ = 0;
  std::vector<Sequence> sequences_;  // oldest first
  std::vector<std::uint64_t> ages_;
};

enum class PolicyKind { random, AU, EU_SD, EU_JSD };

std::string to_string(PolicyKind p);
PolicyKind policy_from_string(const std::string& text);
std::optional<uncertainty::Measure> measure_for(PolicyKind p);

struct ExperimentCondition {
  std::string name;
  PolicyKind policy = PolicyKind::random;
  sim::SensorMode sensors = sim::SensorMode::local;
  double replacement_fraction = 0.05;

  bool active() const { return policy != PolicyKind::random; }
  void validate() const;
};

// Everything a (condition, seed) job needs besides the condition itself.
struct RunSettings {
  std::uint64_t experiment_seed = 0;
  int epochs = 150;
  int ensemble_size = 5;
  int buffer_capacity = 200;
  int sequence_length = 50;
  HeuristicConfig heuristic;
  model::TrainOptions training;
  nn::AdamConfig adam;
  planner::PlannerConfig planner;
  int jsd_samples = 64;
  int checkpoint_interval = 0;  // 0: final checkpoints only
};

struct EpochLog {
  int epoch = 0;
  double train_nll = 0.0;
  double val_nll = 0.0;
  std::size_t replaced = 0;
};

struct RunResult {
  std::vector<EpochLog> epochs;
  model::Ensemble ensemble;
  std::vector<Sequence> seen;        // every sequence that entered the buffer
  std::vector<int> seen_epoch;       // epoch at which each entered (0: initial)
  std::vector<std::vector<std::uint64_t>> buffer_ages;  // per-epoch snapshot
};

// Seeds of the sub-streams. Buffer initialisation and model initialisation
// depend only on (experiment seed, seed index) so all conditions of one seed
// start identically; exploration streams also mix in the condition name.
std::uint64_t buffer_seed(std::uint64_t experiment_seed, int seed);
std::uint64_t member_seed(std::uint64_t experiment_seed, int seed, int member);
std::uint64_t shuffle_seed(std::uint64_t experiment_seed, int seed, int member);
std::uint64_t exploration_seed(std::uint64_t experiment_seed, int seed,
                               const std::string& condition);
std::uint64_t validation_seed(std::uint64_t experiment_seed);

// Initial heuristic buffer for one seed (sensors for the given range).
std::vector<Sequence> initial_buffer(const sim::EnvironmentSpec& spec,
                                     const RunSettings& settings, int seed,
                                     double sensor_range);

// Runs one (condition, seed) job. When `out_dir` is set, writes
// losses.csv, positions.csv, speeds.csv and checkpoints/ beneath it.
// Throws model::DivergenceError (with diagnostics) if any member diverges.
RunResult run_condition(const ExperimentCondition& condition, int seed,
                        const RunSettings& settings,
                        const sim::EnvironmentSpec& train_env,
                        std::span<const Sequence> validation,
                        const std::optional<std::filesystem::path>& out_dir,
                        const std::function<void(const EpochLog&)>& on_epoch = {});

}  // namespace afl::explore
