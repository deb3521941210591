#include <gtest/gtest.h>

#include <cmath>

#include "memrw/agents.hpp"
#include "memrw/cubes.hpp"
#include "memrw/episode.hpp"
#include "memrw/error.hpp"
#include "memrw/eval.hpp"
#include "memrw/tmaze.hpp"

using namespace memrw;

namespace {

double success_rate(const EnvConfig& config, const std::string& agent, int episodes,
                    std::uint64_t base = 0) {
  auto env = make_environment(config);
  auto a = make_agent(agent, config);
  int wins = 0;
  for (int e = 0; e < episodes; ++e) wins += run_episode(*env, *a, hash_seed(base, e)).success;
  return static_cast<double>(wins) / episodes;
}

double three_sigma(double p, int n) { return 3 * std::sqrt(p * (1 - p) / n); }

}  // namespace

TEST(TMazeOracle, SolvesEveryFixedAndUniformConfig) {
  for (auto regime : {Regime::Fixed, Regime::Uniform}) {
    for (int l = 1; l <= 10; ++l) {
      for (int n = 1; n <= 10; ++n) {
        ASSERT_EQ(success_rate(make_tmaze_config(l, n, regime), "oracle", 100), 1.0)
            << to_string(regime) << " l=" << l << " n=" << n;
      }
    }
  }
}

TEST(TMazeOracle, ReturnOnFiveByThree) {
  tmaze::TMazeEnv env(make_tmaze_config(5, 3));
  agents::TMazeOracle oracle;
  const auto log = run_episode(env, oracle, 0);
  EXPECT_NEAR(log.total_return, 2.85, 1e-12);
}

TEST(StaleAgent, SingleCorridorAlwaysSucceeds) {
  EXPECT_EQ(success_rate(make_tmaze_config(5, 1), "stale", 1000), 1.0);
}

TEST(StaleAgent, MatchesHalfToTheNMinusOne) {
  const int episodes = 10000;
  for (int n : {3, 5, 10}) {
    const double expected = std::pow(0.5, n - 1);
    const double got = success_rate(make_tmaze_config(3, n), "stale", episodes, 17);
    EXPECT_NEAR(got, expected, three_sigma(expected, episodes)) << "n=" << n;
  }
}

TEST(RandomTurnAgent, MatchesHalfToTheN) {
  const int episodes = 10000;
  for (int n : {1, 2, 3, 5}) {
    const double expected = std::pow(0.5, n);
    const double got = success_rate(make_tmaze_config(2, n), "random", episodes, 5);
    EXPECT_NEAR(got, expected, three_sigma(expected, episodes)) << "n=" << n;
  }
}

TEST(RandomTurnAgent, SeededAndReproducible) {
  const auto config = make_tmaze_config(3, 4);
  tmaze::TMazeEnv env(config);
  agents::RandomTurnAgent a, b;
  EXPECT_EQ(run_episode(env, a, 11), run_episode(env, b, 11));
}

TEST(LatchAgent, SolvesLongestGrid) {
  for (auto regime : {Regime::Fixed, Regime::Uniform}) {
    EXPECT_EQ(success_rate(make_tmaze_config(10, 10, regime), "latch", 100), 1.0);
  }
}

TEST(LatchAgent, MemoryTracksLastCue) {
  tmaze::TMazeEnv env(make_tmaze_config(4, 6));
  agents::LatchAgent latch;
  auto obs = env.reset(21);
  latch.reset(21);
  while (!env.done()) {
    const int a = latch.act(obs);
    const auto cue = env.state().cues[static_cast<std::size_t>(env.state().corridor_index)];
    EXPECT_EQ(latch_argmax(latch.memory()), cue == tmaze::Direction::Left ? 0 : 1);
    obs = env.step(a).obs;
  }
  EXPECT_TRUE(env.succeeded());
}

TEST(StepToward, XBeforeY) {
  using cubes::Action;
  EXPECT_EQ(agents::step_toward({0, 0}, {2, 3}), Action::MoveRight);
  EXPECT_EQ(agents::step_toward({2, 0}, {2, 3}), Action::MoveDown);
  EXPECT_EQ(agents::step_toward({2, 4}, {2, 3}), Action::MoveUp);
  EXPECT_EQ(agents::step_toward({3, 3}, {2, 3}), Action::MoveLeft);
  EXPECT_EQ(agents::step_toward({2, 3}, {2, 3}), Action::Interact);
}

TEST(CubesOracle, SolvesAllModes) {
  for (auto mode : {Mode::Trivial, Mode::Medium, Mode::Extreme}) {
    EXPECT_EQ(success_rate(validate_config(make_cubes_config(mode)), "oracle", 100), 1.0)
        << to_string(mode);
  }
}

TEST(CubesOracle, NeverAmbiguousAcrossShapes) {
  for (int g : {2, 3, 5, 8}) {
    for (int n : {2, 3, 5}) {
      if (n > g * g - 1) continue;
      for (double p : {0.0, 0.3, 1.0}) {
        EnvConfig c = make_cubes_config(Mode::Extreme);
        c.grid_size = g;
        c.cube_count = n;
        c.subepisode_count = 4;
        c.max_steps.reset();
        c.teleport_prob = p;
        c = validate_config(c);
        cubes::CubesEnv env(c);
        agents::CubesOracle oracle(n, Mode::Extreme);
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
          EpisodeLog log;
          ASSERT_NO_THROW(log = run_episode(env, oracle, seed)) << "G=" << g << " N=" << n << " p=" << p;
          EXPECT_TRUE(log.success);
        }
      }
    }
  }
}

TEST(CubesOracle, InfersEveryExtremeTeleport) {
  const auto c = validate_config(make_cubes_config(Mode::Extreme));
  cubes::CubesEnv env(c);
  agents::CubesOracle oracle(3, Mode::Extreme);
  long teleports = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto log = run_episode(env, oracle, seed);
    for (const auto& s : log.steps) teleports += s.result.flag(info_key::kTeleportOccurred);
  }
  // Teleports land on free cells, so every one of them is a visible move.
  EXPECT_EQ(oracle.inferences(), teleports);
  EXPECT_GT(teleports, 100);
}

TEST(CubesOracle, RejectsPositionsOnlyOutsideExtreme) {
  agents::CubesOracle oracle(2, Mode::Medium);
  oracle.reset(0);
  // agent (0,0); cubes at (1,0) and (2,0) without colors; target 0.
  const Observation obs{{0, 0, 1, 0, -1, 2, 0, -1, 0}};
  try {
    oracle.act(obs);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InferenceAmbiguous);
  }
}

TEST(CubesOracle, RejectsTwoMovedCubes) {
  agents::CubesOracle oracle(3, Mode::Extreme);
  oracle.reset(0);
  oracle.act(Observation{{0, 0, 1, 0, 0, 2, 0, 1, 3, 0, 2, 0}});
  try {
    oracle.act(Observation{{0, 0, 3, 0, -1, 1, 4, -1, 2, 4, -1, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InferenceAmbiguous);
  }
}

TEST(CubesOracle, RelabelsMovedCube) {
  agents::CubesOracle oracle(3, Mode::Extreme);
  oracle.reset(0);
  oracle.act(Observation{{0, 0, 1, 0, 0, 2, 0, 1, 3, 0, 2, 0}});
  // Color 1 moved from (2,0) to (4,4).
  oracle.act(Observation{{1, 0, 1, 0, -1, 3, 0, -1, 4, 4, -1, 1}});
  EXPECT_EQ(oracle.belief()[1], (cubes::Cell{4, 4}));
  EXPECT_EQ(oracle.belief()[0], (cubes::Cell{1, 0}));
  EXPECT_EQ(oracle.belief()[2], (cubes::Cell{3, 0}));
}

TEST(AmnesiacCubes, TrivialWithoutTeleportsAlwaysSucceeds) {
  EnvConfig c = make_cubes_config(Mode::Trivial);
  c.teleport_prob = 0.0;
  EXPECT_EQ(success_rate(validate_config(c), "amnesiac", 1000), 1.0);
}

// Frozen values from 10 runs x 1000 episodes, base seed 0. In Medium every
// position-bearing observation also carries colors, so keeping only the
// latest update loses nothing and the agent matches the oracle.
TEST(AmnesiacCubes, FrozenRegressionValues) {
  auto rate = [](Mode mode) {
    eval::EvalSpec spec;
    spec.train_config = validate_config(make_cubes_config(mode));
    spec.n_runs = 10;
    spec.episodes_per_run = 1000;
    spec.agent = "amnesiac";
    spec.workers = 4;
    return eval::run_eval(spec).cells.at(0).success_mean;
  };
  const double medium = rate(Mode::Medium);
  const double extreme = rate(Mode::Extreme);
  EXPECT_DOUBLE_EQ(medium, 1.0);
  EXPECT_NEAR(extreme, 0.7226, 1e-12);
  EXPECT_LE(extreme, medium);
  EXPECT_LT(extreme, 1.0);
}

TEST(AgentRegistry, NamesAndFamilies) {
  const auto tm = make_tmaze_config(5, 3);
  const auto cu = validate_config(make_cubes_config(Mode::Medium));
  EXPECT_EQ(make_agent("oracle", tm)->family(), Family::TMaze);
  EXPECT_EQ(make_agent("oracle", cu)->family(), Family::ColorCubes);
  for (const char* name : {"stale", "random", "latch"}) {
    EXPECT_EQ(make_agent(name, tm)->name(), name);
    try {
      make_agent(name, cu);
      FAIL() << name;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::AgentEnvMismatch);
    }
  }
  EXPECT_THROW(make_agent("amnesiac", tm), Error);
  try {
    make_agent("gtrxl", tm);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownAgent);
  }
}

TEST(AgentRegistry, FamilyMismatchInRunEpisode) {
  tmaze::TMazeEnv env(make_tmaze_config(2, 2));
  agents::AmnesiacCubes amnesiac(3);
  try {
    run_episode(env, amnesiac, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AgentEnvMismatch);
  }
}
