#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "memrw/config.hpp"
#include "memrw/config_io.hpp"
#include "memrw/error.hpp"

using namespace memrw;

namespace {

ErrorCode code_of(const EnvConfig& c) {
  try {
    validate_config(c);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected validate_config to throw";
  return ErrorCode::InvalidConfig;
}

EnvConfig cubes(Mode mode) {
  EnvConfig c;
  c.family = Family::ColorCubes;
  c.mode = mode;
  return c;
}

}  // namespace

TEST(ValidateConfig, TrivialForcesSingleCubeAndPhase) {
  EnvConfig c = cubes(Mode::Trivial);
  c.cube_count = 5;
  c.subepisode_count = 4;
  const EnvConfig v = validate_config(c);
  EXPECT_EQ(v.cube_count, 1);
  EXPECT_EQ(v.subepisode_count, 1);
}

TEST(ValidateConfig, ZeroTeleportProbabilityAccepted) {
  EnvConfig c = cubes(Mode::Medium);
  c.teleport_prob = 0.0;
  EXPECT_NO_THROW(validate_config(c));
  c.teleport_prob = 1.0;
  EXPECT_NO_THROW(validate_config(c));
}

TEST(ValidateConfig, TooManyCubes) {
  EnvConfig c = cubes(Mode::Medium);
  c.cube_count = 30;
  c.grid_size = 5;
  EXPECT_EQ(code_of(c), ErrorCode::InvalidDimension);
  // The agent needs one free cell.
  c.cube_count = 25;
  EXPECT_EQ(code_of(c), ErrorCode::InvalidDimension);
  c.cube_count = 24;
  EXPECT_NO_THROW(validate_config(c));
}

TEST(ValidateConfig, ProbabilityOutOfRange) {
  EnvConfig c = cubes(Mode::Extreme);
  c.teleport_prob = -0.1;
  EXPECT_EQ(code_of(c), ErrorCode::InvalidProbability);
  c.teleport_prob = 1.5;
  EXPECT_EQ(code_of(c), ErrorCode::InvalidProbability);
  c.teleport_prob = std::numeric_limits<double>::quiet_NaN();
  EXPECT_EQ(code_of(c), ErrorCode::InvalidProbability);
}

TEST(ValidateConfig, RegimeOnCubesRejected) {
  EnvConfig c = cubes(Mode::Medium);
  c.regime = Regime::Uniform;
  EXPECT_EQ(code_of(c), ErrorCode::InvalidRegimeForFamily);
}

TEST(ValidateConfig, TMazeDimensions) {
  EnvConfig c;
  c.corridor_length = 0;
  EXPECT_EQ(code_of(c), ErrorCode::InvalidDimension);
  c.corridor_length = 3;
  c.corridor_count = 0;
  EXPECT_EQ(code_of(c), ErrorCode::InvalidDimension);
}

TEST(ValidateConfig, TMazeIgnoresCubeFields) {
  EnvConfig c;
  c.cube_count = 1000;
  c.teleport_prob = 7.0;
  EXPECT_NO_THROW(validate_config(c));
}

TEST(ValidateConfig, DefaultStepLimits) {
  EXPECT_EQ(make_tmaze_config(5, 3).step_limit(), 60);
  EXPECT_EQ(make_tmaze_config(10, 10, Regime::Uniform).step_limit(), 400);
  EXPECT_EQ(validate_config(make_cubes_config(Mode::Medium)).step_limit(), 120);
  EXPECT_EQ(validate_config(make_cubes_config(Mode::Trivial)).step_limit(), 40);
}

TEST(ValidateConfig, ExplicitStepLimitKept) {
  EnvConfig c;
  c.max_steps = 7;
  EXPECT_EQ(validate_config(c).step_limit(), 7);
  c.max_steps = 0;
  EXPECT_EQ(code_of(c), ErrorCode::InvalidDimension);
}

TEST(ValidateConfig, RegimeDefaultsToFixed) {
  EnvConfig c;
  EXPECT_EQ(validate_config(c).regime, Regime::Fixed);
}

TEST(ConfigLabel, Readable) {
  EXPECT_EQ(config_label(make_tmaze_config(5, 3)), "tmaze/fixed/l5/n3");
}

TEST(ConfigText, ParsesKeyValueDocument) {
  const EnvConfig c = parse_config(R"(
# endless t-maze
family = tmaze
regime = uniform
corridor_length = 7   # l_max
corridor_count = 4
seed = 12
)");
  EXPECT_EQ(c.family, Family::TMaze);
  EXPECT_EQ(c.regime, Regime::Uniform);
  EXPECT_EQ(c.corridor_length, 7);
  EXPECT_EQ(c.corridor_count, 4);
  EXPECT_EQ(c.seed, 12u);
  EXPECT_EQ(c.step_limit(), 4 * 4 * 7);
}

TEST(ConfigText, RoundTrip) {
  EnvConfig c = make_cubes_config(Mode::Extreme, 99);
  c.target_resampling = TargetResampling::Any;
  c = validate_config(c);
  EXPECT_EQ(parse_config(format_config(c)), c);

  const EnvConfig t = make_tmaze_config(10, 5, Regime::Uniform, 3);
  EXPECT_EQ(parse_config(format_config(t)), t);
}

TEST(ConfigText, Errors) {
  auto code = [](const char* text) {
    try {
      parse_config(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::UnknownAgent;  // sentinel: no throw
  };
  EXPECT_EQ(code("colour = red\n"), ErrorCode::InvalidConfig);
  EXPECT_EQ(code("seed = 1\nseed = 2\n"), ErrorCode::InvalidConfig);
  EXPECT_EQ(code("corridor_length = five\n"), ErrorCode::InvalidConfig);
  EXPECT_EQ(code("just words\n"), ErrorCode::InvalidConfig);
  EXPECT_EQ(code("family = cubes\nregime = fixed\n"), ErrorCode::InvalidRegimeForFamily);
  EXPECT_EQ(code("family = cubes\nteleport_prob = 2\n"), ErrorCode::InvalidProbability);
}

TEST(ConfigText, MissingFileNamesPath) {
  try {
    load_config("/nonexistent/dir/some_env.cfg");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidConfig);
    EXPECT_NE(std::string(e.what()).find("some_env.cfg"), std::string::npos);
  }
}
