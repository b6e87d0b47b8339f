#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "afl/data.hpp"
#include "afl/nn.hpp"
#include "afl/sim.hpp"

namespace afl::model {

inline constexpr int kCodeSize = 5;
// Transition model input layout: [code(5) | delta p(2) | action(4)].
inline constexpr int kTransitionInputSize = kCodeSize + 2 + 4;
inline constexpr double kSigmaFloor = 1e-4;

using Code = Eigen::Matrix<double, kCodeSize, 1>;

// Per-axis Gaussian over the next positional change.
struct GaussianPrediction {
  sim::Vec2 mean = sim::Vec2::Zero();
  sim::Vec2 stddev = sim::Vec2::Ones();
};

// Column-wise batch of predictions (2 x B each).
struct PredictionBatch {
  Eigen::MatrixXd mean;
  Eigen::MatrixXd stddev;
};

// Affordance model a_M (32-64-32-5, relu/relu/tanh) feeding the transition
// model t_M: an 11-64 relu trunk with identity mean and exp sigma heads.
struct WorldModel {
  nn::DenseNet affordance;
  nn::DenseNet trunk;
  nn::DenseNet mean_head;
  nn::DenseNet sigma_head;
  std::uint64_t seed = 0;

  static WorldModel create(std::uint64_t seed);

  std::size_t parameter_count() const;
  bool all_finite() const;

  // Batched evaluation: sensors 32 x B, deltas 2 x B, actions 4 x B.
  Eigen::MatrixXd encode_batch(const Eigen::MatrixXd& sensors) const;
  PredictionBatch predict_batch(const Eigen::MatrixXd& codes,
                                const Eigen::MatrixXd& deltas,
                                const Eigen::MatrixXd& actions) const;
};

using Ensemble = std::vector<WorldModel>;

Code encode_affordance(const WorldModel& model, const sim::SensoryVector& v);

// Throws std::invalid_argument on non-finite inputs.
GaussianPrediction predict(const WorldModel& model, const Code& code,
                           const sim::Vec2& delta, const sim::Action& action);

// Sum over both axes of 0.5 ln(2 pi) + ln sigma + (x - mu)^2 / (2 sigma^2).
// Throws std::invalid_argument when any sigma <= 0.
double nll_loss(const GaussianPrediction& pred, const sim::Vec2& observed);

// Gradients of nll_loss with respect to mean and stddev.
struct NllGradient {
  sim::Vec2 mean;
  sim::Vec2 stddev;
};
NllGradient nll_gradient(const GaussianPrediction& pred,
                         const sim::Vec2& observed);

enum class TrainingMode { teacher_forced, closed_loop };

std::string to_string(TrainingMode mode);
TrainingMode training_mode_from_string(const std::string& text);

struct ModelGradients {
  nn::Gradients affordance;
  nn::Gradients trunk;
  nn::Gradients mean_head;
  nn::Gradients sigma_head;

  static ModelGradients zeros_like(const WorldModel& model);
  void set_zero();
  ModelGradients& operator*=(double scale);
  bool all_finite() const;
};

struct ModelOptimizer {
  nn::AdamState affordance;
  nn::AdamState trunk;
  nn::AdamState mean_head;
  nn::AdamState sigma_head;

  static ModelOptimizer for_model(const WorldModel& model,
                                  nn::AdamConfig config = {});
};

// Closed-loop unrolling probes the look-up map at anticipated positions.
struct LookupContext {
  const sim::EnvironmentSpec* spec = nullptr;
  double sensor_range = 0.0;
};

struct TrainOptions {
  TrainingMode mode = TrainingMode::teacher_forced;
  int batch_size = 8;
  LookupContext lookup;
};

// Total NLL over the scored pairs of `batch`; adds d(total)/d(params) into
// `grads` and the number of scored pairs into `pair_count`.
double accumulate_gradients(const WorldModel& model,
                            std::span<const Sequence* const> batch,
                            TrainingMode mode, const LookupContext& lookup,
                            ModelGradients& grads, std::size_t& pair_count);

// One pass over `dataset` in shuffled batches, one Adam step per batch on the
// batch-mean loss. Returns the mean per-pair NLL seen during the epoch.
// Throws std::invalid_argument on an empty dataset or a sequence shorter
// than two steps, and DivergenceError on a non-finite loss.
double train_epoch(WorldModel& model, std::span<const Sequence> dataset,
                   const TrainOptions& options, ModelOptimizer& optimizer,
                   Rng& rng);

class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Teacher-forced mean NLL over scored pairs.
double evaluate_nll(const WorldModel& model, std::span<const Sequence> dataset);

struct ImaginedStep {
  sim::Vec2 position = sim::Vec2::Zero();  // where the map is probed
  sim::SensoryVector sensors = sim::SensoryVector::Zero();
  std::vector<Code> codes;                     // one per member
  std::vector<GaussianPrediction> predictions; // one per member
  sim::Vec2 next_position = sim::Vec2::Zero();
};

struct ImaginedTrajectory {
  std::vector<ImaginedStep> steps;
  bool clamped = false;  // an anticipated position left the borders
};

// Multi-step imagination: probe, encode, predict, advance by the mean of the
// members' predicted means and feed that mean back as the next delta.
ImaginedTrajectory imagine(std::span<const WorldModel> ensemble,
                           const sim::Vec2& start_position,
                           const sim::Vec2& start_delta,
                           std::span<const sim::Action> actions,
                           const sim::EnvironmentSpec& spec, double range);

// Lock-step imagination of B candidate action sequences.
struct BatchImagination {
  // positions[h] is 2 x B, h = 0..H (positions[0] is the start).
  std::vector<Eigen::MatrixXd> positions;
  // predictions[h][m]: member m's prediction at step h.
  std::vector<std::vector<PredictionBatch>> predictions;
};

// actions[h] is 4 x B.
BatchImagination imagine_batch(std::span<const WorldModel> ensemble,
                               const sim::Vec2& start_position,
                               const sim::Vec2& start_delta,
                               std::span<const Eigen::MatrixXd> actions,
                               const sim::EnvironmentSpec& spec, double range);

// Checkpoint "afl-worldmodel 1": seed line followed by the four networks.
void write_model(std::ostream& out, const WorldModel& model);
WorldModel read_model(std::istream& in);

}  // namespace afl::model
