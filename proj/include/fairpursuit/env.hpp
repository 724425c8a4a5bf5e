#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fairpursuit/geometry.hpp"
#include "fairpursuit/rng.hpp"

namespace fairpursuit {

enum class RewardMode { kMutual, kIndividual };

// Position and heading of one agent. Heading stays wrapped to [-pi, pi);
// positions stay inside the arena square after every step.
struct Pose2D {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;
};

struct EnvConfig {
  int n_pursuers = 3;
  double pursuer_speed = 1.2;
  double evader_speed = 1.0;
  double dt = 0.1;
  double arena_half_width = 1.0;
  double capture_radius = 0.1;
  int horizon = 200;
  RewardMode reward_mode = RewardMode::kMutual;

  int obs_dim() const { return 4 * (n_pursuers + 1); }
  void validate() const;  // throws std::invalid_argument on bad values
};

struct WorldState {
  std::vector<Pose2D> pursuers;
  Pose2D evader;
  int step_index = 0;
};

struct JointAction {
  std::vector<double> headings;  // one per pursuer, wrapped to [-pi, pi)
};

struct RewardVector {
  std::vector<double> components;  // one per pursuer
};

// Slot permutation of the pursuer team. to_slot[i] is the slot agent i
// occupies after the permutation: (sigma . x)[to_slot[i]] = x[i].
struct Permutation {
  std::vector<int> to_slot;

  static Permutation identity(int n);
  static std::vector<Permutation> all(int n);  // n! permutations
  Permutation inverse() const;
  bool valid(int n) const;
  int image(int i) const { return to_slot.at(static_cast<std::size_t>(i)); }
};

WorldState permute(const WorldState& s, const Permutation& sigma);
JointAction permute(const JointAction& a, const Permutation& sigma);
RewardVector permute(const RewardVector& r, const Permutation& sigma);

// Per-pursuer L2 distances and bearings (pursuer -> evader) feeding the
// evader's potential field. Distances are floored at 1e-6 so the 1/r
// weights stay finite for coincident positions.
struct EvaderInputs {
  std::vector<double> distances;
  std::vector<double> bearings;
};

EvaderInputs evader_inputs(const WorldState& s);

// Closed-form maximizer of U(theta) = sum_i (1/r_i) cos(theta - bearing_i).
// Falls back to the evader's previous heading when the weighted resultant
// nearly vanishes (perfectly symmetric surround).
double evader_heading(const WorldState& s);

// Potential-field utility at a candidate heading, for oracle checks.
double evader_utility(const WorldState& s, double theta);

// Bearing from pursuer `agent` straight at the evader.
double greedy_heading(const WorldState& s, int agent);

// Uniform start state over the arena; redraws states that begin inside the
// capture radius (at most 1000 times before reporting a configuration error).
WorldState reset(Rng& rng, const EnvConfig& config);

// Ego-centric view: self first, then teammates sorted by (distance to self,
// bearing from self, heading), then the evader. The ordering depends only on
// geometry, never on slot labels.
struct AgentObservation {
  Pose2D self;
  std::vector<Pose2D> teammates;
  Pose2D evader;

  // (x, y, cos heading, sin heading) per pose; length 4 * (n_pursuers + 1).
  void flatten(std::span<double> out) const;
  std::vector<double> flat() const;
};

AgentObservation observe(const WorldState& s, int agent);
void observe_flat(const WorldState& s, int agent, std::span<double> out);

enum class OutcomeCategory { kCaptureBy, kMultiCapture, kNoCapture };

struct OutcomeRecord {
  OutcomeCategory category = OutcomeCategory::kNoCapture;
  std::vector<int> capturers;     // 1 entry for kCaptureBy, >= 2 for kMultiCapture
  int steps = 0;
  std::vector<double> returns;    // per-agent episode returns (post reward-mode)

  bool captured() const { return category != OutcomeCategory::kNoCapture; }
};

struct StepResult {
  WorldState state;
  RewardVector rewards;
  bool done = false;
  // Present when done. `returns` holds the final-step reward components;
  // rollout_episode replaces them with full-episode sums.
  std::optional<OutcomeRecord> outcome;
};

StepResult step(const WorldState& s, const JointAction& actions, const EnvConfig& config);

using JointPolicy = std::function<JointAction(const WorldState&)>;

// Advance one full episode from `start` under a deterministic policy.
// Accumulates per-agent returns into the outcome. Optionally records the
// visited states (including `start` and the terminal state).
OutcomeRecord rollout_episode(const EnvConfig& config, WorldState start, const JointPolicy& policy,
                              std::vector<WorldState>* trajectory = nullptr);

JointPolicy greedy_policy();

// JSON object with documented field order:
// {"pursuers": [{"x", "y", "heading"}, ...], "evader": {...}, "step_index": n}
std::string world_state_to_json(const WorldState& s);
WorldState world_state_from_json(const std::string& text);

}  // namespace fairpursuit
