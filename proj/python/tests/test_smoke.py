"""End-to-end smoke tests for the Python bindings."""

import math

import pytest

import fairpursuit as fp


def test_version_matches_package_metadata():
    assert fp.__version__ == "0.1.0"


def test_reset_is_seed_deterministic():
    config = fp.EnvConfig()
    a = fp.reset(fp.Rng(42), config)
    b = fp.reset(fp.Rng(42), config)
    assert a.to_json() == b.to_json()
    assert len(a.pursuers) == 3
    assert all(abs(p.x) <= 1.0 and abs(p.y) <= 1.0 for p in a.pursuers)


def test_step_moves_agents_and_pays_step_cost():
    config = fp.EnvConfig()
    state = fp.reset(fp.Rng(7), config)
    result = fp.step(state, [0.0, 0.0, 0.0], config)
    assert result.state.step_index == 1
    for before, after in zip(state.pursuers, result.state.pursuers):
        moved = math.hypot(after.x - before.x, after.y - before.y)
        assert moved <= config.pursuer_speed * config.dt + 1e-12
    assert all(r <= 150.0 for r in result.rewards.components)


def test_observation_is_equivariant_under_team_relabeling():
    config = fp.EnvConfig()
    state = fp.reset(fp.Rng(3), config)
    sigma = fp.Permutation([1, 2, 0])
    permuted = fp.permute_state(state, sigma)
    for agent in range(3):
        assert fp.observe(state, agent) == fp.observe(permuted, sigma.to_slot[agent])


def test_greedy_rollout_captures_fast_evader():
    config = fp.EnvConfig()
    captured = 0
    rng = fp.Rng(5)
    for _ in range(20):
        outcome = fp.rollout_greedy(config, fp.reset(rng, config))
        captured += outcome.captured
    assert captured >= 19


def test_evader_heading_maximizes_its_potential_field():
    config = fp.EnvConfig()
    state = fp.reset(fp.Rng(11), config)
    best = fp.evader_heading(state)
    utility = fp.evader_utility(state, best)
    for k in range(100):
        theta = -math.pi + 2.0 * math.pi * k / 100
        assert utility >= fp.evader_utility(state, theta) - 1e-9


def test_tiny_train_and_evaluate_round_trip(tmp_path):
    config = fp.TrainConfig()
    config.episodes = 3
    config.batch_size = 8
    config.buffer_capacity = 64
    config.updates_per_episode = 1
    config.actor_hidden = [6]
    config.critic_hidden = [6]
    config.noise.decay_episodes = 2
    config.curriculum.v_start = 1.2
    config.curriculum.v_end = 1.2
    config.seed = 9
    artifacts = fp.train(config, fp.EnvConfig(), str(tmp_path))
    tags = [c["tag"] for c in artifacts["checkpoints"]]
    assert tags[0] == "init" and tags[-1] == "final"

    final_dir = artifacts["checkpoints"][-1]["dir"]
    first = fp.evaluate(final_dir, fp.EnvConfig(), velocity=1.2, episodes=5, seed=2)
    second = fp.evaluate(final_dir, fp.EnvConfig(), velocity=1.2, episodes=5, seed=2)
    assert first.csv_row() == second.csv_row()
    assert 0.0 <= first.fairness.bits <= math.log2(3) + 1e-12


def test_config_json_round_trip_rejects_unknown_keys():
    config = fp.TrainConfig()
    config.lambda_ = 0.5
    config.strategy = fp.Strategy.FairER
    back = fp.TrainConfig.from_json(config.to_json())
    assert back.lambda_ == 0.5
    assert back.strategy == fp.Strategy.FairER
    with pytest.raises(ValueError):
        fp.TrainConfig.from_json('{"episodez": 1}')


def test_desk_preset_and_figure_rendering():
    desk = fp.desk_scale_experiment("unused")
    desk.validate()
    assert desk.train_template.episodes == 20000

    rows = fp.parse_results_csv(
        fp.results_csv_header(3)
        + "\nmutual,1,0,0,0.9,0.3,50,30,30,30,10"
        + "\nindividual,1,0,0,0.6,1.1,70,55,3,2,40"
        + "\ngreedy,1,0,0,1,0.05,40,34,33,33,0\n"
    )
    svg = fp.render_figure_svg("f2", fp.aggregate(rows))
    assert svg.startswith("<?xml") and "<svg" in svg
