#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "afl/rng.hpp"
#include "afl/world_model.hpp"

namespace afl::uncertainty {

using model::GaussianPrediction;

enum class Measure { AU, EU_SD, EU_JSD };

std::string to_string(Measure m);
Measure measure_from_string(const std::string& text);

struct UncertaintyMeasure {
  Measure kind = Measure::EU_JSD;
  // Monte-Carlo samples per EU_JSD evaluation, split evenly over members.
  int samples = 64;
};

struct MonteCarloEstimate {
  double value = 0.0;
  double standard_error = 0.0;
};

// Mean predicted standard deviation over members and axes.
double aleatoric(std::span<const GaussianPrediction> predictions);

// Axis-averaged population standard deviation of the members' means.
double epistemic_sd(std::span<const GaussianPrediction> predictions);

// Draws per member for a total budget `samples` over `members` components.
int draws_per_member(int samples, int members);

// Monte-Carlo estimate of (1/n) sum_i KL(P_i || M) for 1-D Gaussians,
// M the equal-weight mixture. `standard_normals` holds one row of draws per
// member; samples from P_i are mean_i + sd_i * z.
MonteCarloEstimate jensen_shannon_1d(std::span<const double> means,
                                     std::span<const double> stddevs,
                                     const Eigen::MatrixXd& standard_normals);

// Per-axis JSD summed over both axes. Throws std::invalid_argument when
// n < 2, samples < 1, or any sigma is below the model's floor.
MonteCarloEstimate epistemic_jsd(std::span<const GaussianPrediction> predictions,
                                 int samples, Rng& rng);

// Same, with caller-provided draws: one (members x draws) matrix per axis.
MonteCarloEstimate epistemic_jsd(std::span<const GaussianPrediction> predictions,
                                 const std::array<Eigen::MatrixXd, 2>& draws);

// Pre-drawn standard normals for repeated JSD evaluation (common random
// numbers across the candidates of one planner call).
std::array<Eigen::MatrixXd, 2> draw_standard_normals(int members, int samples,
                                                      Rng& rng);

// Dispatch over member predictions at one state.
double evaluate(const UncertaintyMeasure& measure,
                std::span<const GaussianPrediction> predictions, Rng& rng);

// Dispatch over an ensemble given per-member (code, delta, action) inputs.
double evaluate(const UncertaintyMeasure& measure,
                std::span<const model::WorldModel> ensemble,
                std::span<const model::Code> codes,
                std::span<const sim::Vec2> deltas,
                std::span<const sim::Action> actions, Rng& rng);

// Column-wise evaluation over a batch: predictions[m] holds member m's
// 2 x B means and stddevs. Returns B values.
Eigen::VectorXd evaluate_batch(const UncertaintyMeasure& measure,
                               std::span<const model::PredictionBatch> predictions,
                               const std::array<Eigen::MatrixXd, 2>& draws);

}  // namespace afl::uncertainty
