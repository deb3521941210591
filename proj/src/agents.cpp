#include "memrw/agents.hpp"

#include <algorithm>

#include "memrw/error.hpp"

namespace memrw {
namespace agents {

using tmaze::Direction;

std::optional<Direction> visible_cue(const Observation& obs) {
  if (obs[0] == 1.0) return Direction::Left;
  if (obs[1] == 1.0) return Direction::Right;
  return std::nullopt;
}

bool at_junction(const Observation& obs) { return obs[2] >= 1.0; }

namespace {

int turn(std::optional<Direction> d) {
  return static_cast<int>(d == Direction::Right ? tmaze::Action::TurnRight
                                                : tmaze::Action::TurnLeft);
}

constexpr int kForward = static_cast<int>(tmaze::Action::MoveForward);

}  // namespace

int TMazeOracle::act(const Observation& obs) {
  if (auto cue = visible_cue(obs)) cue_ = cue;
  return at_junction(obs) ? turn(cue_) : kForward;
}

int StaleAgent::act(const Observation& obs) {
  if (!cue_) cue_ = visible_cue(obs);
  return at_junction(obs) ? turn(cue_) : kForward;
}

int RandomTurnAgent::act(const Observation& obs) {
  if (!at_junction(obs)) return kForward;
  return turn(rng_.below(2) == 0 ? Direction::Left : Direction::Right);
}

void LatchAgent::reset(std::uint64_t) {
  memory_ = cell_.initial_state();
  last_action_ = -1;
}

int LatchAgent::act(const Observation& obs) {
  memory_ = memory_update(memory_, MemoryInput{obs, last_action_}, cell_);
  last_action_ = at_junction(obs)
                     ? turn(latch_argmax(memory_) == 0 ? Direction::Left : Direction::Right)
                     : kForward;
  return last_action_;
}

cubes::Action step_toward(const cubes::Cell& from, const cubes::Cell& to) {
  if (to.x > from.x) return cubes::Action::MoveRight;
  if (to.x < from.x) return cubes::Action::MoveLeft;
  if (to.y > from.y) return cubes::Action::MoveDown;
  if (to.y < from.y) return cubes::Action::MoveUp;
  return cubes::Action::Interact;
}

void CubesOracle::reset(std::uint64_t) {
  color_cell_.assign(static_cast<std::size_t>(cube_count_), cubes::Cell{-1, -1});
  known_ = false;
}

void CubesOracle::absorb(const cubes::ObservationView& view) {
  if (!view.has_positions) return;
  if (view.has_colors) {
    for (const auto& c : view.cubes) color_cell_[static_cast<std::size_t>(c.color)] = c.cell;
    known_ = true;
    return;
  }
  if (mode_ != Mode::Extreme) {
    throw Error(ErrorCode::InferenceAmbiguous, "positions-only update outside extreme mode");
  }
  if (!known_) throw Error(ErrorCode::InferenceAmbiguous, "positions-only update before any full update");

  // Set difference between believed and observed positions.
  std::vector<cubes::Cell> observed;
  for (const auto& c : view.cubes) observed.push_back(c.cell);
  std::vector<std::size_t> vanished;
  for (std::size_t color = 0; color < color_cell_.size(); ++color) {
    if (std::find(observed.begin(), observed.end(), color_cell_[color]) == observed.end()) {
      vanished.push_back(color);
    }
  }
  std::vector<cubes::Cell> appeared;
  for (const auto& cell : observed) {
    if (std::find(color_cell_.begin(), color_cell_.end(), cell) == color_cell_.end()) {
      appeared.push_back(cell);
    }
  }
  if (vanished.empty() && appeared.empty()) return;
  if (vanished.size() != 1 || appeared.size() != 1) {
    throw Error(ErrorCode::InferenceAmbiguous,
                std::to_string(vanished.size()) + " cubes appear to have moved");
  }
  color_cell_[vanished.front()] = appeared.front();
  ++inferences_;
}

int CubesOracle::act(const Observation& obs) {
  const auto view = cubes::decode(obs, cube_count_);
  absorb(view);
  if (!known_) throw Error(ErrorCode::InferenceAmbiguous, "no full update seen yet");
  const cubes::Cell target = color_cell_[static_cast<std::size_t>(view.target_color)];
  return static_cast<int>(step_toward(view.agent, target));
}

void AmnesiacCubes::reset(std::uint64_t seed) {
  rng_ = RngStream(seed, Stream::Agent);
  occupied_.clear();
  target_cell_.reset();
  last_action_ = -1;
}

int AmnesiacCubes::act(const Observation& obs) {
  const auto view = cubes::decode(obs, cube_count_);
  if (view.has_positions) {
    occupied_.clear();
    for (const auto& c : view.cubes) occupied_.push_back(c.cell);
    target_cell_.reset();
    if (view.has_colors) {
      for (const auto& c : view.cubes) {
        if (c.color == view.target_color) target_cell_ = c.cell;
      }
    }
  }

  cubes::Action action;
  if (target_cell_) {
    action = step_toward(view.agent, *target_cell_);
  } else if (std::find(occupied_.begin(), occupied_.end(), view.agent) != occupied_.end() &&
             last_action_ != static_cast<int>(cubes::Action::Interact)) {
    action = cubes::Action::Interact;
  } else {
    action = static_cast<cubes::Action>(rng_.below(4));
  }
  last_action_ = static_cast<int>(action);
  return last_action_;
}

}  // namespace agents

const std::vector<std::string>& agent_names() {
  static const std::vector<std::string> names{"oracle", "stale", "random", "latch", "amnesiac"};
  return names;
}

bool agent_supports(const std::string& name, Family family) {
  if (name == "oracle") return true;
  if (name == "stale" || name == "random" || name == "latch") return family == Family::TMaze;
  if (name == "amnesiac") return family == Family::ColorCubes;
  return false;
}

std::unique_ptr<Agent> make_agent(const std::string& name, const EnvConfig& config) {
  if (std::find(agent_names().begin(), agent_names().end(), name) == agent_names().end()) {
    throw Error(ErrorCode::UnknownAgent, "unknown agent '" + name + "'");
  }
  if (!agent_supports(name, config.family)) {
    throw Error(ErrorCode::AgentEnvMismatch, "agent '" + name + "' does not support " +
                                                 std::string(to_string(config.family)));
  }
  if (config.family == Family::TMaze) {
    if (name == "oracle") return std::make_unique<agents::TMazeOracle>();
    if (name == "stale") return std::make_unique<agents::StaleAgent>();
    if (name == "random") return std::make_unique<agents::RandomTurnAgent>();
    return std::make_unique<agents::LatchAgent>();
  }
  const EnvConfig valid = validate_config(config);
  if (name == "oracle") return std::make_unique<agents::CubesOracle>(valid.cube_count, valid.mode);
  return std::make_unique<agents::AmnesiacCubes>(valid.cube_count);
}

}  // namespace memrw
