#pragma once

#include <string>
#include <vector>

namespace fairpursuit {

// One invariant check with its pinned bound and the measured quantity.
struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double bound = 0.0;
  std::string details;
  double seconds = 0.0;
};

// Tied policies commute with all 6 slot permutations on 1000 random states
// (max wrapped angular deviation <= 1e-9, under 10 s).
CheckResult check_policy_equivariance();
// Tied rollouts from 100 random starts over 200 noise-free steps stay
// permutation-equivariant at the terminal state (<= 1e-6, under 30 s).
CheckResult check_trajectory_equivariance_suite();
// Analytic regularizer gradient matches central finite differences of the
// penalty (eps 1e-4) within 1e-4 relative over 50 small-net trials.
CheckResult check_fair_er_gradient();
// Actor/critic parameter gradients and the critic's action-input gradient
// match finite differences within 1e-4 relative over 50 trials.
CheckResult check_backprop();
// Closed-form evader heading attains the 0.001-rad grid-search utility
// maximum within 1e-6 on 1000 random configurations.
CheckResult check_evader_oracle();
// Team-fairness analytic cases: one-hot capturer -> log2(3) bits, uniform
// captures -> 0, zero captures -> 0, all within 1e-9.
CheckResult check_fairness_analytics();
// Greedy pursuers at v = 1.2 capture in at least 95% of 500 episodes.
CheckResult check_greedy_baseline();

std::vector<CheckResult> run_all_checks();

// "[PASS] name: measured ... (bound ...) in 1.23 s -- details"
std::string format_check_line(const CheckResult& result);

}  // namespace fairpursuit
