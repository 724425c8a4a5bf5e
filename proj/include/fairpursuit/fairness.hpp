#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "fairpursuit/env.hpp"
#include "fairpursuit/net.hpp"
#include "fairpursuit/train.hpp"

namespace fairpursuit {

// One-hot identity vector z_i distinguishing agents for the fairness metric.
struct SensitiveId {
  std::vector<double> one_hot;

  static SensitiveId of(int agent, int n);
  int index() const;   // position of the single 1
  bool valid() const;  // exactly one entry equals 1
};

// Mutual information between episode outcome and agent identity, in bits.
struct FairnessScore {
  double bits = 0.0;
  std::size_t sample_count = 0;
  double success_rate = 0.0;
};

// A tied team: every agent slot resolves to the same parameter storage, so
// any update is visible to all agents at once.
using SharedPolicyHandle = TeamNets;

SharedPolicyHandle tie_parameters(int n, const MLPParams& actor_template,
                                  const MLPParams& critic_template, double tau);
// Ties an existing team to agent 0's nets (used when strategies share one
// initialization draw order).
TeamNets tie_parameters(const TeamNets& team);

// Max wrapped angular difference between pi(sigma . s) and sigma . pi(s)
// over all sampled states and permutations.
double check_equivariance(const JointPolicy& policy, const std::vector<WorldState>& states,
                          const std::vector<Permutation>& permutations);

// Rolls the same deterministic policy from s1 and from sigma . s1 for up to
// `horizon` steps; returns the max componentwise deviation (positions and
// wrapped headings) between sigma . terminal(s1) and terminal(sigma . s1).
double check_trajectory_equivariance(const JointPolicy& policy, const EnvConfig& config,
                                     const WorldState& s1, const Permutation& sigma,
                                     int horizon);

// Angular disagreement measure 1 - cos(a - b): non-negative, zero iff the
// headings coincide modulo 2*pi.
double angular_disagreement(double a, double b);

// Mean pairwise disagreement across the team. observations[i] holds agent
// i's ego view of each sampled state (rows); for each state and each agent i
// every actor is evaluated on agent i's observation, so tied parameters give
// exactly zero.
double fair_er_penalty(const std::vector<MLPParams>& actors,
                       const std::vector<Eigen::MatrixXd>& observations);

// Agent i's slice of the penalty: (1/(M(N-1))) sum_s sum_{j != i}
// (1 - cos(a_i - a_j)) with every actor evaluated on agent i's observations.
double fair_er_penalty_for_agent(const std::vector<MLPParams>& actors,
                                 const Eigen::MatrixXd& observations, int agent);

// Analytic gradient of the per-agent penalty with respect to the agent's own
// actor: (1/(M(N-1))) sum_s sum_{j != i} sin(a_i - a_j) grad mu_i(s).
// Teammates are constants.
GradientSet fair_er_gradient(const MLPParams& actor, const std::vector<MLPParams>& teammates,
                             const Eigen::MatrixXd& observations);
// Same gradient wired to a team and a sampled minibatch (uses the agent's
// own observation batch).
GradientSet fair_er_gradient(const TeamNets& nets, const std::vector<AgentBatch>& batches,
                             int agent);

// Empirical outcome distribution over {CaptureBy(1..n), NoCapture} versus a
// matched reference spreading the same success mass evenly; bits =
// H(reference) - H(empirical), base 2. MultiCapture splits its mass evenly
// among the capturers.
FairnessScore team_fairness(const std::vector<OutcomeRecord>& outcomes, int n);

std::string fairness_report_header(int n_agents);
std::string fairness_report_row(const std::string& strategy, double velocity, double lambda,
                                std::uint64_t seed, const FairnessScore& score,
                                const std::vector<double>& captures_per_agent,
                                double no_capture_count);

}  // namespace fairpursuit
