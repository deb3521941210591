#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "memrw/environment.hpp"

namespace memrw::tmaze {

enum class Direction { Left, Right };

enum class Action : int { MoveForward = 0, TurnLeft = 1, TurnRight = 2 };
inline constexpr int kActionCount = 3;
inline constexpr std::size_t kObservationSize = 3;

inline constexpr double kCorrectTurnReward = 1.0;
inline constexpr double kWrongTurnReward = -1.0;
inline constexpr double kStepPenalty = -0.01;

std::string_view to_string(Action a);
std::string_view to_string(Direction d);

/// Latent state of one Endless T-Maze episode.
struct State {
  int corridor_index = 0;
  int position = 0;  // 0..corridor_lengths[corridor_index]; equal to length at the junction
  std::vector<int> corridor_lengths;
  std::vector<Direction> cues;
  int steps_elapsed = 0;
  int corridors_passed = 0;
  bool done = false;
  bool success = false;

  [[nodiscard]] int current_length() const { return corridor_lengths[corridor_index]; }
  [[nodiscard]] bool at_junction() const { return position == current_length(); }
  bool operator==(const State&) const = default;
};

/// Samples corridor lengths and cues for a validated T-Maze config.
State sample_state(const EnvConfig& config, std::uint64_t seed);

/// (cue_1, cue_2, position/length). The cue is one-hot only at position 0.
Observation observe(const State& state);

/// Pure transition. Mutates `state` and returns the step outcome.
StepResult step(State& state, Action action, const EnvConfig& config);

class TMazeEnv final : public Environment {
 public:
  explicit TMazeEnv(const EnvConfig& config);

  Observation reset(std::uint64_t seed) override;
  StepResult step(int action) override;
  StepResult step(Action action);

  [[nodiscard]] const EnvConfig& config() const override { return config_; }
  [[nodiscard]] std::size_t observation_size() const override { return kObservationSize; }
  [[nodiscard]] int action_count() const override { return kActionCount; }
  [[nodiscard]] std::string action_name(int action) const override;
  [[nodiscard]] bool done() const override { return state_.done; }
  [[nodiscard]] bool succeeded() const override { return state_.success; }
  [[nodiscard]] int progress() const override { return state_.corridors_passed; }
  [[nodiscard]] int progress_capacity() const override { return config_.corridor_count; }
  [[nodiscard]] std::string render() const override;

  [[nodiscard]] const State& state() const { return state_; }
  [[nodiscard]] Observation observe() const { return tmaze::observe(state_); }

 private:
  EnvConfig config_;
  State state_;
  bool has_reset_ = false;
};

}  // namespace memrw::tmaze
