#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "fairpursuit/env.hpp"
#include "fairpursuit/fairness.hpp"
#include "fairpursuit/harness.hpp"
#include "fairpursuit/io.hpp"
#include "fairpursuit/net.hpp"
#include "fairpursuit/plot.hpp"
#include "fairpursuit/rng.hpp"
#include "fairpursuit/train.hpp"
#include "fairpursuit/verify.hpp"

namespace py = pybind11;

using namespace fairpursuit;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fairness-aware multi-agent pursuit-evasion laboratory";
  {
    const std::string version = kVersionString;
    m.attr("__version__") = version.substr(version.find(' ') + 1);
  }

  // --- environment ---

  py::enum_<RewardMode>(m, "RewardMode")
      .value("Mutual", RewardMode::kMutual)
      .value("Individual", RewardMode::kIndividual);

  py::class_<Pose2D>(m, "Pose2D")
      .def(py::init<>())
      .def(py::init([](double x, double y, double heading) {
             return Pose2D{x, y, heading};
           }),
           py::arg("x"), py::arg("y"), py::arg("heading") = 0.0)
      .def_readwrite("x", &Pose2D::x)
      .def_readwrite("y", &Pose2D::y)
      .def_readwrite("heading", &Pose2D::heading)
      .def("__repr__", [](const Pose2D& p) {
        return "Pose2D(x=" + format_double(p.x) + ", y=" + format_double(p.y) +
               ", heading=" + format_double(p.heading) + ")";
      });

  py::class_<EnvConfig>(m, "EnvConfig")
      .def(py::init<>())
      .def_readwrite("n_pursuers", &EnvConfig::n_pursuers)
      .def_readwrite("pursuer_speed", &EnvConfig::pursuer_speed)
      .def_readwrite("evader_speed", &EnvConfig::evader_speed)
      .def_readwrite("dt", &EnvConfig::dt)
      .def_readwrite("arena_half_width", &EnvConfig::arena_half_width)
      .def_readwrite("capture_radius", &EnvConfig::capture_radius)
      .def_readwrite("horizon", &EnvConfig::horizon)
      .def_readwrite("reward_mode", &EnvConfig::reward_mode)
      .def("obs_dim", &EnvConfig::obs_dim)
      .def("validate", &EnvConfig::validate)
      .def("to_json", [](const EnvConfig& c) { return env_config_to_json(c); })
      .def_static("from_json", [](const std::string& text) { return env_config_from_json(text); });

  py::class_<WorldState>(m, "WorldState")
      .def(py::init<>())
      .def_readwrite("pursuers", &WorldState::pursuers)
      .def_readwrite("evader", &WorldState::evader)
      .def_readwrite("step_index", &WorldState::step_index)
      .def("to_json", &world_state_to_json)
      .def_static("from_json", &world_state_from_json);

  py::class_<Rng>(m, "Rng").def(py::init<std::uint64_t>(), py::arg("seed"));

  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](std::vector<int> to_slot) { return Permutation{std::move(to_slot)}; }),
           py::arg("to_slot"))
      .def_readwrite("to_slot", &Permutation::to_slot)
      .def_static("identity", &Permutation::identity, py::arg("n"))
      .def_static("all", &Permutation::all, py::arg("n"))
      .def("inverse", &Permutation::inverse);

  py::enum_<OutcomeCategory>(m, "OutcomeCategory")
      .value("CaptureBy", OutcomeCategory::kCaptureBy)
      .value("MultiCapture", OutcomeCategory::kMultiCapture)
      .value("NoCapture", OutcomeCategory::kNoCapture);

  py::class_<OutcomeRecord>(m, "OutcomeRecord")
      .def_readonly("category", &OutcomeRecord::category)
      .def_readonly("capturers", &OutcomeRecord::capturers)
      .def_readonly("steps", &OutcomeRecord::steps)
      .def_readonly("returns", &OutcomeRecord::returns)
      .def_property_readonly("captured", &OutcomeRecord::captured);

  py::class_<RewardVector>(m, "RewardVector")
      .def_readonly("components", &RewardVector::components);

  py::class_<StepResult>(m, "StepResult")
      .def_readonly("state", &StepResult::state)
      .def_readonly("rewards", &StepResult::rewards)
      .def_readonly("done", &StepResult::done)
      .def_readonly("outcome", &StepResult::outcome);

  m.def("reset", &reset, py::arg("rng"), py::arg("config"));
  m.def(
      "step",
      [](const WorldState& s, const std::vector<double>& headings, const EnvConfig& config) {
        return step(s, JointAction{headings}, config);
      },
      py::arg("state"), py::arg("headings"), py::arg("config"));
  m.def(
      "observe",
      [](const WorldState& s, int agent) { return observe(s, agent).flat(); },
      py::arg("state"), py::arg("agent"),
      "Flat ego-centric observation for one pursuer (length 4 * (n + 1)).");
  m.def("evader_heading", &evader_heading, py::arg("state"));
  m.def("evader_utility", &evader_utility, py::arg("state"), py::arg("theta"));
  m.def("greedy_heading", &greedy_heading, py::arg("state"), py::arg("agent"));
  m.def("permute_state", [](const WorldState& s, const Permutation& sigma) {
    return permute(s, sigma);
  });
  m.def(
      "rollout_episode",
      [](const EnvConfig& config, WorldState start, const py::function& policy) {
        JointPolicy wrapped = [&policy](const WorldState& s) {
          return JointAction{policy(s).cast<std::vector<double>>()};
        };
        return rollout_episode(config, std::move(start), wrapped);
      },
      py::arg("config"), py::arg("start"), py::arg("policy"),
      "Run one episode under a Python policy: state -> list of headings.");
  m.def(
      "rollout_greedy",
      [](const EnvConfig& config, WorldState start) {
        return rollout_episode(config, std::move(start), greedy_policy());
      },
      py::arg("config"), py::arg("start"));

  // --- training ---

  py::enum_<Strategy>(m, "Strategy")
      .value("IndividualReward", Strategy::kIndividualReward)
      .value("MutualReward", Strategy::kMutualReward)
      .value("FairE", Strategy::kFairE)
      .value("FairER", Strategy::kFairER);
  m.def("strategy_name", &strategy_name);
  m.def("strategy_from_name", &strategy_from_name);

  py::class_<NoiseSpec>(m, "NoiseSpec")
      .def(py::init<>())
      .def_readwrite("sigma_start", &NoiseSpec::sigma_start)
      .def_readwrite("sigma_end", &NoiseSpec::sigma_end)
      .def_readwrite("decay_episodes", &NoiseSpec::decay_episodes);

  py::class_<CurriculumSpec>(m, "CurriculumSpec")
      .def(py::init<>())
      .def_readwrite("v_start", &CurriculumSpec::v_start)
      .def_readwrite("v_end", &CurriculumSpec::v_end);

  py::class_<TrainConfig>(m, "TrainConfig")
      .def(py::init<>())
      .def_readwrite("episodes", &TrainConfig::episodes)
      .def_readwrite("batch_size", &TrainConfig::batch_size)
      .def_readwrite("buffer_capacity", &TrainConfig::buffer_capacity)
      .def_readwrite("gamma", &TrainConfig::gamma)
      .def_readwrite("actor_lr", &TrainConfig::actor_lr)
      .def_readwrite("critic_lr", &TrainConfig::critic_lr)
      .def_readwrite("tau", &TrainConfig::tau)
      .def_readwrite("clip", &TrainConfig::clip)
      .def_readwrite("updates_per_episode", &TrainConfig::updates_per_episode)
      .def_readwrite("actor_hidden", &TrainConfig::actor_hidden)
      .def_readwrite("critic_hidden", &TrainConfig::critic_hidden)
      .def_readwrite("strategy", &TrainConfig::strategy)
      .def_readwrite("lambda_", &TrainConfig::lambda)
      .def_readwrite("noise", &TrainConfig::noise)
      .def_readwrite("curriculum", &TrainConfig::curriculum)
      .def_readwrite("seed", &TrainConfig::seed)
      .def("validate", &TrainConfig::validate)
      .def("to_json", [](const TrainConfig& c) { return train_config_to_json(c); })
      .def_static("from_json",
                  [](const std::string& text) { return train_config_from_json(text); });

  m.def("curriculum_velocity", &curriculum_velocity, py::arg("episode"), py::arg("config"));
  m.def("noise_sigma", &noise_sigma, py::arg("episode"), py::arg("config"));

  m.def(
      "train",
      [](const TrainConfig& config, const EnvConfig& env, const std::string& out_dir,
         const std::vector<double>& checkpoint_velocities) {
        TrainOptions options;
        options.out_dir = out_dir;
        options.checkpoint_velocities = checkpoint_velocities;
        RunArtifacts artifacts;
        {
          py::gil_scoped_release release;
          artifacts = train(config, env, options);
        }
        py::list checkpoints;
        for (const CheckpointRef& ref : artifacts.checkpoints) {
          py::dict entry;
          entry["tag"] = ref.tag;
          entry["velocity"] = ref.velocity;
          entry["dir"] = ref.dir;
          checkpoints.append(entry);
        }
        py::dict out;
        out["episode_log_path"] = artifacts.episode_log_path;
        out["checkpoints"] = checkpoints;
        return out;
      },
      py::arg("config"), py::arg("env") = EnvConfig{}, py::arg("out_dir") = std::string{},
      py::arg("checkpoint_velocities") = std::vector<double>{},
      "Run decentralized DDPG training; returns artifact paths.");

  // --- evaluation and experiments ---

  py::class_<FairnessScore>(m, "FairnessScore")
      .def_readonly("bits", &FairnessScore::bits)
      .def_readonly("sample_count", &FairnessScore::sample_count)
      .def_readonly("success_rate", &FairnessScore::success_rate);

  py::class_<EvalResult>(m, "EvalResult")
      .def_readonly("strategy", &EvalResult::strategy)
      .def_readonly("velocity", &EvalResult::velocity)
      .def_readonly("lambda_", &EvalResult::lambda)
      .def_readonly("seed", &EvalResult::seed)
      .def_readonly("success_rate", &EvalResult::success_rate)
      .def_readonly("fairness", &EvalResult::fairness)
      .def_readonly("mean_steps_to_capture", &EvalResult::mean_steps_to_capture)
      .def_readonly("captures", &EvalResult::captures)
      .def_readonly("no_capture_count", &EvalResult::no_capture_count)
      .def("csv_row", &results_csv_row)
      .def("to_json", &eval_result_to_json);

  m.def(
      "evaluate",
      [](const std::string& checkpoint_dir, const EnvConfig& env, double velocity, int episodes,
         std::uint64_t seed) {
        py::gil_scoped_release release;
        return evaluate(checkpoint_dir, env, velocity, episodes, seed);
      },
      py::arg("checkpoint_dir"), py::arg("env") = EnvConfig{}, py::arg("velocity") = 1.0,
      py::arg("episodes") = 100, py::arg("seed") = 0);
  m.def(
      "evaluate_greedy",
      [](const EnvConfig& env, double velocity, int episodes, std::uint64_t seed) {
        py::gil_scoped_release release;
        return evaluate_greedy(env, velocity, episodes, seed);
      },
      py::arg("env") = EnvConfig{}, py::arg("velocity") = 1.2, py::arg("episodes") = 100,
      py::arg("seed") = 0);
  m.def("results_csv_header", &results_csv_header, py::arg("n_agents") = 3);
  m.def("derive_seed", &derive_seed, py::arg("master"), py::arg("tag"), py::arg("a"),
        py::arg("b") = 0);

  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("strategies", &ExperimentConfig::strategies)
      .def_readwrite("test_velocities", &ExperimentConfig::test_velocities)
      .def_readwrite("lambdas", &ExperimentConfig::lambdas)
      .def_readwrite("seeds", &ExperimentConfig::seeds)
      .def_readwrite("eval_episodes", &ExperimentConfig::eval_episodes)
      .def_readwrite("include_greedy", &ExperimentConfig::include_greedy)
      .def_readwrite("workers", &ExperimentConfig::workers)
      .def_readwrite("master_seed", &ExperimentConfig::master_seed)
      .def_readwrite("train_template", &ExperimentConfig::train_template)
      .def_readwrite("env", &ExperimentConfig::env)
      .def_readwrite("out_dir", &ExperimentConfig::out_dir)
      .def("validate", &ExperimentConfig::validate)
      .def("to_json", [](const ExperimentConfig& c) { return experiment_config_to_json(c); });

  m.def("desk_scale_experiment", &desk_scale_experiment, py::arg("out_dir"));
  m.def("paper_scale_experiment", &paper_scale_experiment, py::arg("out_dir"));

  py::class_<CellStatus>(m, "CellStatus")
      .def_readonly("id", &CellStatus::id)
      .def_readonly("status", &CellStatus::status)
      .def_readonly("checkpoint_dirs", &CellStatus::checkpoint_dirs);

  py::class_<MatrixResult>(m, "MatrixResult")
      .def_readonly("rows", &MatrixResult::rows)
      .def_readonly("cells", &MatrixResult::cells)
      .def_readonly("results_path", &MatrixResult::results_path)
      .def_readonly("manifest_path", &MatrixResult::manifest_path);

  m.def(
      "run_matrix",
      [](const ExperimentConfig& config) {
        py::gil_scoped_release release;
        return run_matrix(config);
      },
      py::arg("config"), "Train and evaluate every experiment cell (cached on rerun).");

  py::class_<AggregateRow>(m, "AggregateRow")
      .def_readonly("strategy", &AggregateRow::strategy)
      .def_readonly("lambda_", &AggregateRow::lambda)
      .def_readonly("velocity", &AggregateRow::velocity)
      .def_readonly("n_seeds", &AggregateRow::n_seeds)
      .def_readonly("success_mean", &AggregateRow::success_mean)
      .def_readonly("success_std", &AggregateRow::success_std)
      .def_readonly("bits_mean", &AggregateRow::bits_mean)
      .def_readonly("bits_std", &AggregateRow::bits_std)
      .def_readonly("steps_mean", &AggregateRow::steps_mean)
      .def_readonly("steps_std", &AggregateRow::steps_std);

  m.def("aggregate", &aggregate, py::arg("rows"));
  m.def("aggregate_csv", &aggregate_csv, py::arg("rows"));
  m.def("parse_results_csv", &parse_results_csv, py::arg("text"));
  m.def("render_figure_svg", &render_figure_svg, py::arg("figure"), py::arg("aggregate_rows"));
  m.def("write_figure_svg", &write_figure_svg, py::arg("figure"), py::arg("aggregate_rows"),
        py::arg("out_path"));

  // --- invariant checks ---

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("passed", &CheckResult::passed)
      .def_readonly("measured", &CheckResult::measured)
      .def_readonly("bound", &CheckResult::bound)
      .def_readonly("details", &CheckResult::details)
      .def_readonly("seconds", &CheckResult::seconds)
      .def("__repr__", &format_check_line);

  m.def("run_all_checks", []() {
    py::gil_scoped_release release;
    return run_all_checks();
  });
}
