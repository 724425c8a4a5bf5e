#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fairpursuit/env.hpp"
#include "fairpursuit/net.hpp"
#include "fairpursuit/replay.hpp"
#include "fairpursuit/rng.hpp"

namespace fairpursuit {

enum class Strategy {
  kIndividualReward,
  kMutualReward,
  kFairE,
  kFairER,
};

std::string strategy_name(Strategy strategy);
Strategy strategy_from_name(const std::string& name);

// Exploration noise: sigma decays linearly from sigma_start to sigma_end over
// the first decay_episodes episodes, then stays at sigma_end.
// decay_episodes <= 0 means "half the training run".
struct NoiseSpec {
  double sigma_start = 0.5;
  double sigma_end = 0.05;
  int decay_episodes = 0;
};

// Pursuer speed anneals linearly from v_start (episode 0) to v_end (last
// episode); the evader speed stays fixed so the speed ratio sweeps through
// every intermediate regime.
struct CurriculumSpec {
  double v_start = 1.2;
  double v_end = 0.4;
};

struct TrainConfig {
  int episodes = 20000;
  int batch_size = 512;
  std::size_t buffer_capacity = 500000;
  double gamma = 0.99;
  double actor_lr = 1e-4;
  double critic_lr = 1e-3;
  double tau = 0.001;
  double clip = 0.5;
  // Gradient rounds run after each episode; 0 means one round per
  // environment step of the episode just collected.
  int updates_per_episode = 0;
  std::vector<int> actor_hidden{128, 128};
  std::vector<int> critic_hidden{128, 128, 128};
  Strategy strategy = Strategy::kMutualReward;
  double lambda = 0.0;  // Fair-ER equivariance weight
  NoiseSpec noise;
  CurriculumSpec curriculum;
  std::uint64_t seed = 0;

  void validate() const;
};

double curriculum_velocity(int episode, const TrainConfig& config);
double noise_sigma(int episode, const TrainConfig& config);

// Online/target actor and critic for one agent.
struct AgentNets {
  TargetPair actor;
  TargetPair critic;
};

// A team is a vector of per-agent net handles. Fair-E ties every handle to
// the same AgentNets object, so one update moves every agent.
struct TeamNets {
  std::vector<std::shared_ptr<AgentNets>> agents;

  int size() const { return static_cast<int>(agents.size()); }
  bool tied() const;
};

TeamNets make_independent_nets(int n_agents, int obs_dim, const TrainConfig& config, Rng& rng);

// Deterministic joint policy from the online actors.
JointPolicy team_policy(const TeamNets& nets, EnvConfig config);
// Deterministic joint policy from standalone actor parameters (e.g. loaded
// from checkpoints).
JointPolicy actors_policy(std::vector<MLPParams> actors, EnvConfig config);

// Runs one episode with wrapped Gaussian exploration noise (no draws when
// sigma == 0), pushing every joint transition into the buffer.
OutcomeRecord collect_episode(const EnvConfig& config, const TeamNets& nets, double sigma,
                              Rng& rng, ReplayBuffer& buffer);

// Per-agent view of a sampled minibatch.
struct AgentBatch {
  Eigen::MatrixXd obs;       // M x obs_dim
  Eigen::MatrixXd next_obs;  // M x obs_dim
  Eigen::VectorXd actions;   // M
  Eigen::VectorXd rewards;   // M
  Eigen::VectorXd done;      // M, 1.0 where the transition ended the episode
};

AgentBatch sample_agent_batch(const ReplayBuffer& buffer, int agent, int obs_dim,
                              int batch_size, Rng& rng);
// Same minibatch indices viewed by each agent (one sample_index stream).
std::vector<AgentBatch> sample_team_batches(const ReplayBuffer& buffer, int n_agents,
                                            int obs_dim, int batch_size, Rng& rng);

// Extra ascent-direction gradient added to the policy-gradient step, used to
// plug the Fair-ER regularizer into the actor update. Receives the agent
// index and the whole team's view of the sampled minibatch, so the penalty
// can compare co-located actions.
using ActorRegularizer =
    std::function<GradientSet(int agent, const std::vector<AgentBatch>& batches)>;

// TD(0) critic gradient on one batch. Returns the pre-update loss.
struct CriticGrad {
  double loss = 0.0;
  GradientSet grads;
};
CriticGrad compute_critic_grad(const AgentNets& nets, const AgentBatch& batch, double gamma);

// Deterministic-policy-gradient ascent direction for one agent's actor,
// chaining dQ/da through the (cos a, sin a) critic input encoding. If
// `regularizer` is non-null its output is added before clipping.
GradientSet compute_actor_grad(const AgentNets& nets, const std::vector<AgentBatch>& batches,
                               int agent, const ActorRegularizer* regularizer);

// One clipped descent step on agent's TD loss plus a Polyak target update.
// Returns the pre-update loss. Operates on the agent's slot directly, so on a
// tied team it moves the shared parameters without averaging.
double critic_update(int agent, const AgentBatch& batch, TeamNets& nets,
                     const TrainConfig& config);

// One clipped ascent step on agent's policy objective (optionally including a
// regularizer term) plus a Polyak target update.
void actor_update(int agent, const std::vector<AgentBatch>& batches, TeamNets& nets,
                  const TrainConfig& config, const ActorRegularizer* regularizer = nullptr);

// One full gradient round: per-agent critic descent then actor ascent, each
// followed by a Polyak target update. Tied teams average per-agent gradients
// into the shared parameters and step once. Returns the mean critic loss.
double update_round(TeamNets& nets, const ReplayBuffer& buffer, const TrainConfig& config,
                    int obs_dim, Rng& rng, const ActorRegularizer* regularizer);

// Per-episode row of the training log.
struct EpisodeStats {
  int episode = 0;
  double velocity = 0.0;
  double sigma = 0.0;
  OutcomeRecord outcome;
};

struct TrainOptions {
  std::string out_dir;                          // empty: no files written
  std::vector<double> checkpoint_velocities;    // snapshot when curriculum crosses
  std::function<void(const EpisodeStats&)> on_episode;  // optional progress hook
};

struct CheckpointRef {
  std::string tag;       // "init", "v1.2", ..., "final"
  double velocity = 0.0; // curriculum velocity at snapshot time
  std::string dir;       // directory holding actor_agent_<k>.json
};

struct RunArtifacts {
  TeamNets nets;
  std::string episode_log_path;  // empty when out_dir is empty
  std::vector<CheckpointRef> checkpoints;
};

// Full decentralized DDPG run under the velocity curriculum. The reward mode
// follows the strategy: IndividualReward trains on raw contributions, all
// other strategies on the shared team reward. episodes == 0 yields only the
// initial checkpoint.
RunArtifacts train(const TrainConfig& config, EnvConfig env, const TrainOptions& options);

std::string episode_log_header(int n_agents);
std::string episode_log_row(const EpisodeStats& stats);

// Writes one actor JSON per agent into dir (actor_agent_<k>.json).
void save_actor_checkpoint(const TeamNets& nets, const std::string& dir);
std::vector<MLPParams> load_actor_checkpoint(const std::string& dir, int n_agents);

}  // namespace fairpursuit
