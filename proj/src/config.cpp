#include "memrw/config.hpp"

#include <string>

#include "memrw/error.hpp"

namespace memrw {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidDimension: return "InvalidDimension";
    case ErrorCode::InvalidProbability: return "InvalidProbability";
    case ErrorCode::InvalidRegimeForFamily: return "InvalidRegimeForFamily";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SteppedAfterDone: return "SteppedAfterDone";
    case ErrorCode::InvalidAction: return "InvalidAction";
    case ErrorCode::InferenceAmbiguous: return "InferenceAmbiguous";
    case ErrorCode::AgentEnvMismatch: return "AgentEnvMismatch";
    case ErrorCode::FamilyMismatch: return "FamilyMismatch";
    case ErrorCode::UnknownAgent: return "UnknownAgent";
    case ErrorCode::MalformedReport: return "MalformedReport";
  }
  return "Unknown";
}

std::string_view to_string(Family f) { return f == Family::TMaze ? "tmaze" : "cubes"; }
std::string_view to_string(Regime r) { return r == Regime::Fixed ? "fixed" : "uniform"; }

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::Trivial: return "trivial";
    case Mode::Medium: return "medium";
    case Mode::Extreme: return "extreme";
  }
  return "medium";
}

std::string_view to_string(TargetResampling t) {
  return t == TargetResampling::ExcludePrevious ? "exclude_previous" : "any";
}

Family parse_family(std::string_view s) {
  if (s == "tmaze" || s == "TMaze") return Family::TMaze;
  if (s == "cubes" || s == "ColorCubes" || s == "color_cubes") return Family::ColorCubes;
  throw Error(ErrorCode::InvalidConfig, "unknown family '" + std::string(s) + "'");
}

Regime parse_regime(std::string_view s) {
  if (s == "fixed" || s == "Fixed") return Regime::Fixed;
  if (s == "uniform" || s == "Uniform") return Regime::Uniform;
  throw Error(ErrorCode::InvalidConfig, "unknown regime '" + std::string(s) + "'");
}

Mode parse_mode(std::string_view s) {
  if (s == "trivial" || s == "Trivial") return Mode::Trivial;
  if (s == "medium" || s == "Medium") return Mode::Medium;
  if (s == "extreme" || s == "Extreme") return Mode::Extreme;
  throw Error(ErrorCode::InvalidConfig, "unknown mode '" + std::string(s) + "'");
}

TargetResampling parse_target_resampling(std::string_view s) {
  if (s == "exclude_previous") return TargetResampling::ExcludePrevious;
  if (s == "any") return TargetResampling::Any;
  throw Error(ErrorCode::InvalidConfig, "unknown target_resampling '" + std::string(s) + "'");
}

namespace {

void require_positive(int value, const char* name) {
  if (value < 1) {
    throw Error(ErrorCode::InvalidDimension,
                std::string(name) + " must be >= 1, got " + std::to_string(value));
  }
}

}  // namespace

EnvConfig validate_config(EnvConfig config) {
  if (config.max_steps && *config.max_steps < 1) {
    throw Error(ErrorCode::InvalidDimension,
                "max_steps must be >= 1, got " + std::to_string(*config.max_steps));
  }

  if (config.family == Family::TMaze) {
    require_positive(config.corridor_length, "corridor_length");
    require_positive(config.corridor_count, "corridor_count");
    if (!config.regime) config.regime = Regime::Fixed;
    if (!config.max_steps) config.max_steps = 4 * config.corridor_count * config.corridor_length;
    return config;
  }

  if (config.regime) {
    throw Error(ErrorCode::InvalidRegimeForFamily,
                "regime applies to tmaze only, got regime=" +
                    std::string(to_string(*config.regime)) + " for cubes");
  }
  if (!(config.teleport_prob >= 0.0 && config.teleport_prob <= 1.0)) {
    throw Error(ErrorCode::InvalidProbability,
                "teleport_prob must lie in [0, 1], got " + std::to_string(config.teleport_prob));
  }
  require_positive(config.grid_size, "grid_size");
  if (config.mode == Mode::Trivial) {
    config.cube_count = 1;
    config.subepisode_count = 1;
  }
  require_positive(config.cube_count, "cube_count");
  require_positive(config.subepisode_count, "subepisode_count");
  const int cells = config.grid_size * config.grid_size;
  // The agent spawns on a cube-free cell, so one cell must stay empty.
  if (config.cube_count > cells - 1) {
    throw Error(ErrorCode::InvalidDimension,
                "cube_count " + std::to_string(config.cube_count) + " does not fit a " +
                    std::to_string(config.grid_size) + "x" + std::to_string(config.grid_size) +
                    " grid with a free cell for the agent");
  }
  if (!config.max_steps) config.max_steps = config.subepisode_count * 8 * config.grid_size;
  return config;
}

EnvConfig make_tmaze_config(int corridor_length, int corridor_count, Regime regime,
                            std::uint64_t seed) {
  EnvConfig c;
  c.family = Family::TMaze;
  c.regime = regime;
  c.corridor_length = corridor_length;
  c.corridor_count = corridor_count;
  c.seed = seed;
  return validate_config(c);
}

EnvConfig make_cubes_config(Mode mode, std::uint64_t seed) {
  EnvConfig c;
  c.family = Family::ColorCubes;
  c.mode = mode;
  c.grid_size = 5;
  c.cube_count = 3;
  c.subepisode_count = 3;
  c.teleport_prob = 0.3;
  c.seed = seed;
  return validate_config(c);
}

std::string config_label(const EnvConfig& config) {
  if (config.family == Family::TMaze) {
    return "tmaze/" + std::string(to_string(config.effective_regime())) + "/l" +
           std::to_string(config.corridor_length) + "/n" + std::to_string(config.corridor_count);
  }
  return "cubes/" + std::string(to_string(config.mode)) + "/G" +
         std::to_string(config.grid_size) + "/N" + std::to_string(config.cube_count) + "/K" +
         std::to_string(config.subepisode_count);
}

}  // namespace memrw
