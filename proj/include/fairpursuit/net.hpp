#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

#include "fairpursuit/rng.hpp"

namespace fairpursuit {

// Output head of a dense net. Actor: single unit, pi * tanh, so the heading
// lands in [-pi, pi]. Critic: single linear unit.
enum class Head { kActor, kCritic };

// Dense MLP parameters. Hidden activations are rectified-linear.
struct MLPParams {
  std::vector<int> layer_sizes;  // e.g. {16, 128, 128, 1}
  Head head = Head::kActor;
  std::vector<Eigen::MatrixXd> weights;  // [out x in] per layer
  std::vector<Eigen::VectorXd> biases;

  int input_dim() const { return layer_sizes.front(); }
  std::size_t parameter_count() const;
  bool shape_matches(const MLPParams& other) const;
  bool all_finite() const;
};

// Weights uniform in +-1/sqrt(fan_in), biases zero; the draw order is
// row-major per layer so a seed pins every parameter.
MLPParams init_mlp(Rng& rng, const std::vector<int>& layer_sizes, Head head);

// Activations recorded during a forward pass; required by backward().
struct ForwardTrace {
  std::vector<Eigen::MatrixXd> activations;  // activations[0] = input batch
  std::vector<Eigen::MatrixXd> preacts;      // z per layer
  Eigen::VectorXd output;                    // scalar head value per sample
};

// Batched forward pass; rows of `input` are samples.
ForwardTrace forward(const MLPParams& params, const Eigen::MatrixXd& input);

double forward_scalar(const MLPParams& params, std::span<const double> input);

// Heading from an actor net for a single observation.
double forward_actor(const MLPParams& params, std::span<const double> obs);

// Q-value for (observation, heading); the heading enters as (cos a, sin a)
// appended to the observation, which makes Q invariant to 2*pi shifts.
double forward_critic(const MLPParams& params, std::span<const double> obs, double action);

Eigen::MatrixXd critic_input(const Eigen::MatrixXd& obs, const Eigen::VectorXd& actions);

struct GradientSet {
  std::vector<Eigen::MatrixXd> weights;
  std::vector<Eigen::VectorXd> biases;

  static GradientSet zeros_like(const MLPParams& params);
  void accumulate(const GradientSet& other, double scale = 1.0);
  void scale(double factor);
  bool all_finite() const;
};

double global_norm(const GradientSet& grads);

// Scale the whole gradient so its global norm is at most max_norm.
void clip_global_norm(GradientSet& grads, double max_norm);

struct BackwardResult {
  GradientSet params;        // d(sum_m upstream_m * y_m) / d(parameters)
  Eigen::MatrixXd inputs;    // same quantity w.r.t. the input batch
};

// Exact reverse-mode gradients for the recorded forward pass. `upstream`
// weights each sample's scalar output; gradients are summed over the batch.
BackwardResult backward(const MLPParams& params, const ForwardTrace& trace,
                        const Eigen::VectorXd& upstream);

struct OptimizerState {
  double learning_rate = 1e-3;
  double clip_norm = 0.5;
};

enum class StepDirection { kAscent, kDescent };

// Global-norm clip, then params +- learning_rate * grads. Non-finite
// gradients reject the update with an error.
void apply_update(MLPParams& params, const GradientSet& grads, const OptimizerState& opt,
                  StepDirection direction);

struct TargetPair {
  MLPParams online;
  MLPParams target;
  double tau = 0.001;
};

TargetPair make_target_pair(const MLPParams& params, double tau);

// target <- tau * online + (1 - tau) * target, elementwise.
void polyak_update(TargetPair& pair);

// Checkpoint JSON: {"layer_sizes", "head", "params"} with the flat parameter
// array in row-major weight order followed by the bias of each layer.
// Round-trips bit-exactly.
std::string to_checkpoint_json(const MLPParams& params);
MLPParams from_checkpoint_json(const std::string& text);
void save_checkpoint(const MLPParams& params, const std::string& path);
MLPParams load_checkpoint(const std::string& path);

}  // namespace fairpursuit
