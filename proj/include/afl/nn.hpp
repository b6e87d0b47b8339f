#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "afl/rng.hpp"

namespace afl::nn {

enum class Activation { identity, relu, tanh, exp };

std::string to_string(Activation a);
Activation activation_from_string(const std::string& text);

struct Layer {
  Eigen::MatrixXd weight;  // out x in
  Eigen::VectorXd bias;    // out
  Activation activation = Activation::identity;

  int inputs() const { return static_cast<int>(weight.cols()); }
  int outputs() const { return static_cast<int>(weight.rows()); }
};

// Chain of affine layers, each followed by an element-wise activation.
// Batched entry points take one sample per column.
class DenseNet {
 public:
  DenseNet() = default;

  // Zero-initialised network with sizes.size() - 1 layers.
  DenseNet(std::span<const int> sizes, std::span<const Activation> activations);

  // Weights uniform in +-sqrt(6 / (fan_in + fan_out)), zero biases.
  static DenseNet glorot(std::span<const int> sizes,
                         std::span<const Activation> activations, Rng& rng);

  int input_size() const;
  int output_size() const;
  std::size_t parameter_count() const;

  std::vector<Layer>& layers() { return layers_; }
  const std::vector<Layer>& layers() const { return layers_; }

  Eigen::VectorXd forward(const Eigen::VectorXd& input) const;
  Eigen::MatrixXd forward_batch(const Eigen::MatrixXd& inputs) const;

  bool all_finite() const;

 private:
  std::vector<Layer> layers_;
};

// Per-layer activations of one batched forward pass: values[0] is the input,
// values[i + 1] the output of layer i.
struct ForwardTrace {
  std::vector<Eigen::MatrixXd> values;
  const Eigen::MatrixXd& output() const { return values.back(); }
};

ForwardTrace forward_trace(const DenseNet& net, const Eigen::MatrixXd& inputs);

// Parameter-shaped accumulator.
struct Gradients {
  std::vector<Eigen::MatrixXd> weight;
  std::vector<Eigen::VectorXd> bias;

  static Gradients zeros_like(const DenseNet& net);
  void set_zero();
  Gradients& operator+=(const Gradients& other);
  Gradients& operator*=(double scale);
  bool all_finite() const;
  double squared_norm() const;
};

// Reverse pass over a recorded trace. Adds parameter gradients into
// `accumulate` and returns the gradient with respect to the inputs.
Eigen::MatrixXd backward(const DenseNet& net, const ForwardTrace& trace,
                         const Eigen::MatrixXd& output_gradient,
                         Gradients& accumulate);

struct BackwardResult {
  Gradients parameters;
  Eigen::VectorXd input_gradient;
};

// Single-sample convenience: recomputes the forward pass internally.
BackwardResult backward(const DenseNet& net, const Eigen::VectorXd& input,
                        const Eigen::VectorXd& output_gradient);

struct AdamConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

struct AdamState {
  AdamConfig config;
  Gradients first_moment;
  Gradients second_moment;
  long step = 0;

  static AdamState for_net(const DenseNet& net, AdamConfig config = {});
};

// Bias-corrected Adam update. Throws std::runtime_error on a non-finite
// gradient, leaving parameters and state untouched.
void adam_step(DenseNet& net, const Gradients& grads, AdamState& state);

// Text checkpoint, format "afl-densenet 1":
//   afl-densenet 1
//   layers <L>
//   layer <in> <out> <activation>        (L lines)
//   <weights row-major, then biases, %.17g, one layer per line>
void write_net(std::ostream& out, const DenseNet& net);
DenseNet read_net(std::istream& in);

}  // namespace afl::nn
