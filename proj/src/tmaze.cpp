#include "memrw/tmaze.hpp"

#include <sstream>

#include "memrw/error.hpp"
#include "memrw/rng.hpp"

namespace memrw::tmaze {

std::string_view to_string(Action a) {
  switch (a) {
    case Action::MoveForward: return "MOVE_FORWARD";
    case Action::TurnLeft: return "TURN_LEFT";
    case Action::TurnRight: return "TURN_RIGHT";
  }
  return "?";
}

std::string_view to_string(Direction d) { return d == Direction::Left ? "L" : "R"; }

State sample_state(const EnvConfig& config, std::uint64_t seed) {
  State s;
  const int n = config.corridor_count;
  const int l_max = config.corridor_length;
  s.corridor_lengths.reserve(n);
  s.cues.reserve(n);

  RngStream length_rng(seed, Stream::CorridorLength);
  RngStream cue_rng(seed, Stream::Cue);
  const bool uniform = config.effective_regime() == Regime::Uniform;
  for (int i = 0; i < n; ++i) {
    s.corridor_lengths.push_back(uniform ? static_cast<int>(length_rng.between(1, l_max)) : l_max);
    s.cues.push_back(cue_rng.below(2) == 0 ? Direction::Left : Direction::Right);
  }
  return s;
}

Observation observe(const State& state) {
  Observation obs{{0.0, 0.0, 0.0}};
  const int length = state.current_length();
  if (state.position == 0) {
    if (state.cues[state.corridor_index] == Direction::Left) {
      obs.values[0] = 1.0;
    } else {
      obs.values[1] = 1.0;
    }
  }
  obs.values[2] = static_cast<double>(state.position) / static_cast<double>(length);
  return obs;
}

StepResult step(State& state, Action action, const EnvConfig& config) {
  if (state.done) throw Error(ErrorCode::SteppedAfterDone, "tmaze episode already ended");

  StepResult r;
  r.info[info_key::kCorridor] = state.corridor_index;
  r.info[info_key::kPosition] = state.position;
  r.info[info_key::kCueVisible] = state.position == 0 ? 1.0 : 0.0;

  const bool turning = action == Action::TurnLeft || action == Action::TurnRight;
  if (state.at_junction() && turning) {
    const Direction chosen = action == Action::TurnLeft ? Direction::Left : Direction::Right;
    if (chosen == state.cues[state.corridor_index]) {
      r.reward = kCorrectTurnReward;
      r.info[info_key::kJunctionCorrect] = 1.0;
      ++state.corridors_passed;
      if (state.corridor_index + 1 == static_cast<int>(state.cues.size())) {
        r.terminated = true;
        state.success = true;
      } else {
        ++state.corridor_index;
        state.position = 0;
      }
    } else {
      r.reward = kWrongTurnReward;
      r.info[info_key::kJunctionWrong] = 1.0;
      r.terminated = true;
    }
  } else {
    // Forward steps and idle actions (turns mid-corridor, forward at the
    // junction) all cost the step penalty.
    if (action == Action::MoveForward && !state.at_junction()) ++state.position;
    r.reward = kStepPenalty;
  }

  ++state.steps_elapsed;
  if (!r.terminated && state.steps_elapsed >= config.step_limit()) r.truncated = true;
  state.done = r.terminated || r.truncated;
  r.info[info_key::kSuccess] = state.success ? 1.0 : 0.0;
  r.obs = observe(state);
  return r;
}

TMazeEnv::TMazeEnv(const EnvConfig& config) : config_(validate_config(config)) {
  if (config_.family != Family::TMaze) {
    throw Error(ErrorCode::FamilyMismatch, "TMazeEnv needs a tmaze config");
  }
  state_ = sample_state(config_, config_.seed);
}

Observation TMazeEnv::reset(std::uint64_t seed) {
  state_ = sample_state(config_, seed);
  has_reset_ = true;
  return observe();
}

StepResult TMazeEnv::step(int action) {
  if (action < 0 || action >= kActionCount) {
    throw Error(ErrorCode::InvalidAction, "tmaze action " + std::to_string(action));
  }
  return step(static_cast<Action>(action));
}

StepResult TMazeEnv::step(Action action) {
  if (!has_reset_) reset(config_.seed);
  return tmaze::step(state_, action, config_);
}

std::string TMazeEnv::action_name(int action) const {
  if (action < 0 || action >= kActionCount) return "?";
  return std::string(to_string(static_cast<Action>(action)));
}

std::string TMazeEnv::render() const {
  std::ostringstream out;
  out << "corridor " << state_.corridor_index + 1 << "/" << state_.cues.size() << " [";
  const int length = state_.current_length();
  for (int p = 0; p <= length; ++p) out << (p == state_.position ? '@' : (p == length ? 'T' : '.'));
  out << "] cue=" << to_string(state_.cues[state_.corridor_index])
      << " passed=" << state_.corridors_passed;
  return out.str();
}

}  // namespace memrw::tmaze
