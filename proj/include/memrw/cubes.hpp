#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "memrw/environment.hpp"
#include "memrw/rng.hpp"

namespace memrw::cubes {

enum class Action : int { MoveUp = 0, MoveDown = 1, MoveLeft = 2, MoveRight = 3, Interact = 4 };
inline constexpr int kActionCount = 5;

inline constexpr double kInteractReward = 1.0;
inline constexpr double kPenalty = -0.01;

std::string_view to_string(Action a);

struct Cell {
  int x = 0;
  int y = 0;
  bool operator==(const Cell&) const = default;
  auto operator<=>(const Cell&) const = default;
};

/// Row-major order (y, then x). Used for the cube slots of an observation.
inline bool row_major_less(const Cell& a, const Cell& b) {
  return a.y != b.y ? a.y < b.y : a.x < b.x;
}

int manhattan(const Cell& a, const Cell& b);
/// Applies a movement action, clamped to the grid. Interact is a no-op.
Cell apply_move(const Cell& from, Action action, int grid_size);

enum class PendingUpdate { None, Full, PositionsOnly };

/// Latent state. Cube i keeps its identity for the whole episode; its color
/// is cube_color[i].
struct State {
  Cell agent;
  std::vector<Cell> cube_pos;
  std::vector<int> cube_color;
  int target_color = 0;
  int subepisodes_done = 0;
  int steps_elapsed = 0;
  PendingUpdate pending_update = PendingUpdate::Full;
  bool done = false;

  [[nodiscard]] int cube_with_color(int color) const;
  [[nodiscard]] int cube_at(const Cell& c) const;  // -1 when empty
  bool operator==(const State&) const = default;
};

/// Observation layout: [agent_x, agent_y, (x, y, color) per cube, target].
/// Cube slots are listed in row-major order of their cells, so a slot never
/// identifies a cube by itself; identity travels only through the color
/// field, which is hidden on positions-only updates.
std::size_t observation_size(int cube_count);

struct ObservedCube {
  Cell cell;
  int color = -1;  // -1 when hidden
};

/// Decoded view of a Color-Cubes observation.
struct ObservationView {
  Cell agent;
  int target_color = -1;
  bool has_positions = false;
  bool has_colors = false;
  std::vector<ObservedCube> cubes;  // empty unless has_positions
};

ObservationView decode(const Observation& obs, int cube_count);

/// Builds the observation for the current pending update without consuming it.
Observation render_observation(const State& state);

class CubesEnv final : public Environment {
 public:
  explicit CubesEnv(const EnvConfig& config);

  Observation reset(std::uint64_t seed) override;
  StepResult step(int action) override;
  StepResult step(Action action);

  /// Emits the observation for the pending update and resets it to None.
  Observation observe();

  [[nodiscard]] const EnvConfig& config() const override { return config_; }
  [[nodiscard]] std::size_t observation_size() const override {
    return cubes::observation_size(config_.cube_count);
  }
  [[nodiscard]] int action_count() const override { return kActionCount; }
  [[nodiscard]] std::string action_name(int action) const override;
  [[nodiscard]] bool done() const override { return state_.done; }
  [[nodiscard]] bool succeeded() const override {
    return state_.subepisodes_done == config_.subepisode_count;
  }
  [[nodiscard]] int progress() const override { return state_.subepisodes_done; }
  [[nodiscard]] int progress_capacity() const override { return config_.subepisode_count; }
  /// ASCII grid: '@' agent, digits are visible cube colors, '?' hidden cubes.
  [[nodiscard]] std::string render() const override;

  [[nodiscard]] const State& state() const { return state_; }

 private:
  Cell random_free_cell(RngStream& rng) const;
  void teleport(int cube, RngStream& rng);
  int sample_next_target(int previous);

  EnvConfig config_;
  State state_;
  RngStream layout_rng_;
  RngStream teleport_rng_;
  RngStream target_rng_;
  bool has_reset_ = false;
};

}  // namespace memrw::cubes
