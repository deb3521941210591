#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "memrw/config.hpp"
#include "memrw/types.hpp"

namespace memrw {

class Environment;
class Agent;

/// One transition. `t` is the index of the observation the action was chosen
/// from; the initial observation has index 0.
struct StepRecord {
  int t = 0;
  int action = 0;
  StepResult result;
};

struct EpisodeLog {
  EnvConfig config;
  std::uint64_t seed = 0;
  std::string agent;
  Observation initial_obs;
  std::vector<StepRecord> steps;

  // Derived counters, filled by run_episode.
  double total_return = 0.0;
  int progress = 0;  // corridors passed / sub-episodes completed
  bool success = false;
  bool truncated = false;

  bool operator==(const EpisodeLog& other) const;
};

/// Runs one episode to completion (termination or truncation).
EpisodeLog run_episode(Environment& env, Agent& agent, std::uint64_t seed);

/// Replays a fixed action list (stops early if the episode ends).
EpisodeLog replay_actions(Environment& env, std::uint64_t seed, const std::vector<int>& actions);

/// Counts progress from the trace itself: correct junctions for T-Maze,
/// successful interactions for Color-Cubes, up to the end of the episode.
int progress_metric(const EpisodeLog& log);

/// One line per step: t, corridor, position, action, reward, cue flag.
std::string tmaze_trace_dump(const EpisodeLog& log);
/// One ASCII grid per observation ('@' agent, digits colors, '?' hidden).
std::string cubes_trace_dump(const EpisodeLog& log);

void to_json(nlohmann::json& j, const EpisodeLog& log);
void to_json(nlohmann::json& j, const EnvConfig& config);
void from_json(const nlohmann::json& j, EnvConfig& config);

}  // namespace memrw
