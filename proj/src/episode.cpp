#include "memrw/episode.hpp"

#include <cstdio>
#include <sstream>

#include "memrw/agents.hpp"
#include "memrw/cubes.hpp"
#include "memrw/environment.hpp"
#include "memrw/error.hpp"
#include "memrw/tmaze.hpp"

namespace memrw {

bool EpisodeLog::operator==(const EpisodeLog& other) const {
  if (!(config == other.config && seed == other.seed && agent == other.agent &&
        initial_obs == other.initial_obs && total_return == other.total_return &&
        progress == other.progress && success == other.success && truncated == other.truncated &&
        steps.size() == other.steps.size())) {
    return false;
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& a = steps[i];
    const auto& b = other.steps[i];
    if (a.t != b.t || a.action != b.action || a.result.obs != b.result.obs ||
        a.result.reward != b.result.reward || a.result.terminated != b.result.terminated ||
        a.result.truncated != b.result.truncated || a.result.info != b.result.info) {
      return false;
    }
  }
  return true;
}

namespace {

void finish(EpisodeLog& log, const Environment& env) {
  log.total_return = 0.0;
  for (const auto& s : log.steps) log.total_return += s.result.reward;
  log.progress = env.progress();
  log.success = env.succeeded();
  log.truncated = !log.steps.empty() && log.steps.back().result.truncated;
}

}  // namespace

EpisodeLog run_episode(Environment& env, Agent& agent, std::uint64_t seed) {
  if (agent.family() != env.family()) {
    throw Error(ErrorCode::AgentEnvMismatch, "agent '" + agent.name() + "' cannot drive a " +
                                                 std::string(to_string(env.family())) + " env");
  }
  EpisodeLog log;
  log.config = env.config();
  log.seed = seed;
  log.agent = agent.name();
  log.initial_obs = env.reset(seed);
  agent.reset(seed);

  Observation obs = log.initial_obs;
  int t = 0;
  while (!env.done()) {
    const int action = agent.act(obs);
    StepResult r = env.step(action);
    obs = r.obs;
    log.steps.push_back({t++, action, std::move(r)});
  }
  finish(log, env);
  return log;
}

EpisodeLog replay_actions(Environment& env, std::uint64_t seed, const std::vector<int>& actions) {
  EpisodeLog log;
  log.config = env.config();
  log.seed = seed;
  log.agent = "replay";
  log.initial_obs = env.reset(seed);
  int t = 0;
  for (int action : actions) {
    if (env.done()) break;
    log.steps.push_back({t++, action, env.step(action)});
  }
  finish(log, env);
  return log;
}

int progress_metric(const EpisodeLog& log) {
  const char* key = log.config.family == Family::TMaze ? info_key::kJunctionCorrect
                                                       : info_key::kInteractionSuccess;
  int count = 0;
  for (const auto& s : log.steps) {
    if (s.result.flag(key)) ++count;
    if (s.result.done()) break;
  }
  return count;
}

std::string tmaze_trace_dump(const EpisodeLog& log) {
  std::ostringstream out;
  out << "# t corridor position action reward cue_visible\n";
  char buf[128];
  for (const auto& s : log.steps) {
    const auto& info = s.result.info;
    std::snprintf(buf, sizeof buf, "%d %d %d %s %+.2f %d\n", s.t,
                  static_cast<int>(info.at(info_key::kCorridor)),
                  static_cast<int>(info.at(info_key::kPosition)),
                  std::string(tmaze::to_string(static_cast<tmaze::Action>(s.action))).c_str(),
                  s.result.reward, s.result.flag(info_key::kCueVisible) ? 1 : 0);
    out << buf;
  }
  return out.str();
}

namespace {

std::string render_view(const cubes::ObservationView& view, int grid_size) {
  const auto g = static_cast<std::size_t>(grid_size);
  std::vector<std::string> rows(g, std::string(g, '.'));
  for (const auto& c : view.cubes) {
    rows[static_cast<std::size_t>(c.cell.y)][static_cast<std::size_t>(c.cell.x)] =
        c.color < 0 ? '?' : static_cast<char>('0' + c.color % 10);
  }
  rows[static_cast<std::size_t>(view.agent.y)][static_cast<std::size_t>(view.agent.x)] = '@';
  std::ostringstream out;
  out << "target=" << view.target_color
      << (view.has_positions ? (view.has_colors ? " update=full" : " update=positions")
                             : " update=none")
      << "\n";
  for (const auto& row : rows) out << row << "\n";
  return out.str();
}

}  // namespace

std::string cubes_trace_dump(const EpisodeLog& log) {
  const int n = log.config.cube_count;
  const int g = log.config.grid_size;
  std::ostringstream out;
  out << "t=0 reset\n" << render_view(cubes::decode(log.initial_obs, n), g);
  char buf[96];
  for (const auto& s : log.steps) {
    std::snprintf(buf, sizeof buf, "t=%d %s reward=%+.2f%s\n", s.t + 1,
                  std::string(cubes::to_string(static_cast<cubes::Action>(s.action))).c_str(),
                  s.result.reward, s.result.flag(info_key::kTeleportOccurred) ? " teleport" : "");
    out << buf << render_view(cubes::decode(s.result.obs, n), g);
  }
  return out.str();
}

void to_json(nlohmann::json& j, const EnvConfig& c) {
  j = nlohmann::json::object();
  j["family"] = to_string(c.family);
  if (c.regime) j["regime"] = to_string(*c.regime);
  j["corridor_length"] = c.corridor_length;
  j["corridor_count"] = c.corridor_count;
  j["grid_size"] = c.grid_size;
  j["cube_count"] = c.cube_count;
  j["subepisode_count"] = c.subepisode_count;
  j["teleport_prob"] = c.teleport_prob;
  j["mode"] = to_string(c.mode);
  j["target_resampling"] = to_string(c.target_resampling);
  if (c.max_steps) j["max_steps"] = *c.max_steps;
  j["seed"] = c.seed;
}

void from_json(const nlohmann::json& j, EnvConfig& c) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidConfig, "config must be a JSON object");
  c = EnvConfig{};
  for (const auto& [key, value] : j.items()) {
    if (key == "family") c.family = parse_family(value.get<std::string>());
    else if (key == "regime") c.regime = parse_regime(value.get<std::string>());
    else if (key == "corridor_length") c.corridor_length = value.get<int>();
    else if (key == "corridor_count") c.corridor_count = value.get<int>();
    else if (key == "grid_size") c.grid_size = value.get<int>();
    else if (key == "cube_count") c.cube_count = value.get<int>();
    else if (key == "subepisode_count") c.subepisode_count = value.get<int>();
    else if (key == "teleport_prob") c.teleport_prob = value.get<double>();
    else if (key == "mode") c.mode = parse_mode(value.get<std::string>());
    else if (key == "target_resampling") c.target_resampling = parse_target_resampling(value.get<std::string>());
    else if (key == "max_steps") c.max_steps = value.get<int>();
    else if (key == "seed") c.seed = value.get<std::uint64_t>();
    else throw Error(ErrorCode::InvalidConfig, "unknown config key '" + key + "'");
  }
}

void to_json(nlohmann::json& j, const EpisodeLog& log) {
  j = nlohmann::json::object();
  j["config"] = log.config;
  j["seed"] = log.seed;
  j["agent"] = log.agent;
  j["initial_obs"] = log.initial_obs.values;
  auto steps = nlohmann::json::array();
  for (const auto& s : log.steps) {
    steps.push_back({{"t", s.t},
                     {"action", s.action},
                     {"obs", s.result.obs.values},
                     {"reward", s.result.reward},
                     {"terminated", s.result.terminated},
                     {"truncated", s.result.truncated},
                     {"info", s.result.info}});
  }
  j["steps"] = std::move(steps);
  j["total_return"] = log.total_return;
  j["progress"] = log.progress;
  j["success"] = log.success;
  j["truncated"] = log.truncated;
}

}  // namespace memrw
