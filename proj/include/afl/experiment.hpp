#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "afl/analysis.hpp"
#include "afl/config.hpp"

namespace afl::experiment {

// Output layout beneath config.output_dir:
//   effective_config.yaml
//   <condition>/seed_<k>/losses.csv       epoch,seed,condition,train_nll,val_nll
//   <condition>/seed_<k>/positions.csv    every sequence that entered the buffer
//   <condition>/seed_<k>/speeds.csv       per-step true speeds of those sequences
//   <condition>/seed_<k>/checkpoints/member_<m>.txt
//   <condition>/seed_<k>/status           "complete" or the failure message
//   report/                               written by report()
std::filesystem::path job_dir(const std::filesystem::path& root,
                              const std::string& condition, int seed);

struct RunOptions {
  std::optional<std::string> condition;
  std::optional<int> seed;
  int jobs = 1;
  // Skip jobs whose status is complete under an identical effective config.
  bool resume = false;
};

struct JobFailure {
  std::string condition;
  int seed = 0;
  std::string message;
};

// Runs every selected (condition, seed) job on a pool of `jobs` workers.
// Progress goes to `log`. Throws config::ConfigError if a filter matches
// nothing.
std::vector<JobFailure> run_experiment(const config::ExperimentConfig& config,
                                       const RunOptions& options, std::ostream& log);

bool job_complete(const std::filesystem::path& root, const std::string& condition,
                  int seed);

// Validation set of one experiment: shared by all conditions and seeds, with
// sensory vectors for the requested sensor mode.
std::vector<Sequence> validation_set(const config::ExperimentConfig& config,
                                     sim::SensorMode mode);

struct LossRow {
  int epoch = 0;
  double train_nll = 0.0;
  double val_nll = 0.0;
};
std::vector<LossRow> read_losses(const std::filesystem::path& path);

// Positions of every logged sequence step (true positions).
std::vector<sim::Vec2> read_positions(const std::filesystem::path& path);
std::vector<double> read_speeds(const std::filesystem::path& path);

struct Verdict {
  std::string id;
  std::string description;
  bool evaluated = false;
  bool pass = false;
  std::string detail;
};

// Thresholds of the comparative checks.
inline constexpr double kSeedMajority = 0.8;       // share of seeds that must agree
inline constexpr double kColorTolerance = 0.05;    // per-channel RGB difference
inline constexpr double kViolationShare = 0.5;     // global-map pairs that must differ

struct Report {
  std::vector<std::string> gaps;  // missing or incomplete artifacts
  std::vector<Verdict> verdicts;
};

// Aggregates a completed output directory into `dir`/report and evaluates
// the comparative checks that apply to its conditions. Throws
// std::runtime_error listing the missing artifacts if nothing is usable.
Report report(const std::filesystem::path& dir, std::ostream& out);

std::string format_verdict(const Verdict& v);

}  // namespace afl::experiment
