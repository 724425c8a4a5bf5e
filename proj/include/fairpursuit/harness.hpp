#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fairpursuit/env.hpp"
#include "fairpursuit/fairness.hpp"
#include "fairpursuit/train.hpp"

namespace fairpursuit {

inline constexpr const char* kVersionString = "fairpursuit 0.1.0";

// Full run matrix: strategies x test velocities x lambdas (Fair-ER only) x
// seeds, all trained from one curriculum run per cell and evaluated at each
// velocity's checkpoint.
struct ExperimentConfig {
  std::vector<Strategy> strategies{Strategy::kMutualReward, Strategy::kIndividualReward,
                                   Strategy::kFairE, Strategy::kFairER};
  std::vector<double> test_velocities{1.2, 1.1, 1.0, 0.9, 0.8, 0.7, 0.6, 0.5, 0.4};
  std::vector<double> lambdas{0.0, 0.1, 0.5, 0.9, 1.0};
  std::vector<std::uint64_t> seeds{0, 1, 2, 3, 4};
  int eval_episodes = 100;
  bool include_greedy = true;
  int workers = 1;
  std::uint64_t master_seed = 0;
  TrainConfig train_template;
  EnvConfig env;
  std::string out_dir;

  void validate() const;
};

// One result row: a policy evaluated at one velocity.
struct EvalResult {
  std::string strategy;
  double velocity = 0.0;
  double lambda = 0.0;
  std::uint64_t seed = 0;
  double success_rate = 0.0;
  FairnessScore fairness;
  double mean_steps_to_capture = 0.0;
  std::vector<double> captures;  // per agent; multi-captures split evenly
  int no_capture_count = 0;
};

// Derive an independent RNG stream from run coordinates.
std::uint64_t derive_seed(std::uint64_t master, std::string_view tag, std::uint64_t a,
                          std::uint64_t b = 0);

// Noise-free evaluation of a frozen joint policy at a fixed pursuer
// velocity. Only the labels (strategy/lambda/seed) are left for the caller.
EvalResult evaluate_policy(const JointPolicy& policy, EnvConfig env, double velocity,
                           int episodes, std::uint64_t seed);
// Loads actor_agent_*.json from a checkpoint directory first.
EvalResult evaluate(const std::string& checkpoint_dir, EnvConfig env, double velocity,
                    int episodes, std::uint64_t seed);
EvalResult evaluate_greedy(EnvConfig env, double velocity, int episodes, std::uint64_t seed);

std::string results_csv_header(int n_agents);
std::string results_csv_row(const EvalResult& result);
std::vector<EvalResult> parse_results_csv(const std::string& text);

std::string eval_result_to_json(const EvalResult& result);
EvalResult eval_result_from_json(const std::string& text);

struct CellStatus {
  std::string id;
  std::string status;  // "ok", "cached", or "error: ..."
  std::uint64_t config_checksum = 0;
  std::vector<std::string> checkpoint_dirs;
};

struct MatrixResult {
  std::vector<EvalResult> rows;
  std::vector<CellStatus> cells;
  std::string results_path;
  std::string manifest_path;
};

// Runs every cell (training + per-velocity evaluation), isolating failures
// per cell. Finished cells are recorded under <out_dir>/cells/<id>/cell.json
// keyed by a config checksum, and are reused on rerun instead of retrained.
// The results CSV is rewritten atomically with rows in normalized order.
MatrixResult run_matrix(const ExperimentConfig& config);

struct AggregateRow {
  std::string strategy;
  double lambda = 0.0;
  double velocity = 0.0;
  int n_seeds = 0;
  double success_mean = 0.0;
  double success_std = 0.0;
  double bits_mean = 0.0;
  double bits_std = 0.0;
  double steps_mean = 0.0;
  double steps_std = 0.0;
};

// Mean and sample standard deviation across seeds per (strategy, lambda,
// velocity). Cells absent from `rows` are simply absent from the output.
std::vector<AggregateRow> aggregate(const std::vector<EvalResult>& rows);
std::string aggregate_csv(const std::vector<AggregateRow>& rows);

// Cells requested by the config but absent from the result rows.
std::vector<std::string> missing_cells(const ExperimentConfig& config,
                                       const std::vector<EvalResult>& rows);

// Figure-analogue slices of the aggregate table.
struct FigureTable {
  std::string name;  // "f2", "f3b", "f3c", "f5"
  std::vector<AggregateRow> rows;
};
std::vector<FigureTable> figure_tables(const std::vector<AggregateRow>& agg);

// Desk-budget experiment preset: trimmed nets and batches sized for a single
// CPU core, three seeds, the full velocity sweep, lambdas {0, 0.5, 0.9}.
ExperimentConfig desk_scale_experiment(const std::string& out_dir);
// Hyperparameters as published: 125k episodes, 128-wide nets, batch 512,
// five seeds, lambdas {0, 0.1, 0.5, 0.9, 1.0}.
ExperimentConfig paper_scale_experiment(const std::string& out_dir);

std::string experiment_config_to_json(const ExperimentConfig& config);

// Strict JSON (de)serializers for configs: unknown keys are rejected,
// omitted keys keep their defaults.
std::string train_config_to_json(const TrainConfig& config);
TrainConfig train_config_from_json(const std::string& text);
std::string env_config_to_json(const EnvConfig& config);
EnvConfig env_config_from_json(const std::string& text);

}  // namespace fairpursuit
