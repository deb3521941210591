#include "memrw/cubes.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "memrw/error.hpp"

namespace memrw::cubes {

std::string_view to_string(Action a) {
  switch (a) {
    case Action::MoveUp: return "MOVE_UP";
    case Action::MoveDown: return "MOVE_DOWN";
    case Action::MoveLeft: return "MOVE_LEFT";
    case Action::MoveRight: return "MOVE_RIGHT";
    case Action::Interact: return "INTERACT";
  }
  return "?";
}

int manhattan(const Cell& a, const Cell& b) { return std::abs(a.x - b.x) + std::abs(a.y - b.y); }

Cell apply_move(const Cell& from, Action action, int grid_size) {
  Cell to = from;
  switch (action) {
    case Action::MoveUp: to.y = std::max(0, to.y - 1); break;
    case Action::MoveDown: to.y = std::min(grid_size - 1, to.y + 1); break;
    case Action::MoveLeft: to.x = std::max(0, to.x - 1); break;
    case Action::MoveRight: to.x = std::min(grid_size - 1, to.x + 1); break;
    case Action::Interact: break;
  }
  return to;
}

int State::cube_with_color(int color) const {
  for (std::size_t i = 0; i < cube_color.size(); ++i) {
    if (cube_color[i] == color) return static_cast<int>(i);
  }
  return -1;
}

int State::cube_at(const Cell& c) const {
  for (std::size_t i = 0; i < cube_pos.size(); ++i) {
    if (cube_pos[i] == c) return static_cast<int>(i);
  }
  return -1;
}

std::size_t observation_size(int cube_count) { return 2 + 3 * static_cast<std::size_t>(cube_count) + 1; }

Observation render_observation(const State& state) {
  const std::size_t n = state.cube_pos.size();
  Observation obs{std::vector<double>(observation_size(static_cast<int>(n)), kMaskSentinel)};
  obs.values[0] = state.agent.x;
  obs.values[1] = state.agent.y;
  obs.values.back() = state.target_color;
  if (state.pending_update == PendingUpdate::None) return obs;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return row_major_less(state.cube_pos[a], state.cube_pos[b]);
  });
  const bool colors = state.pending_update == PendingUpdate::Full;
  for (std::size_t slot = 0; slot < n; ++slot) {
    const std::size_t cube = order[slot];
    obs.values[2 + 3 * slot] = state.cube_pos[cube].x;
    obs.values[3 + 3 * slot] = state.cube_pos[cube].y;
    if (colors) obs.values[4 + 3 * slot] = state.cube_color[cube];
  }
  return obs;
}

ObservationView decode(const Observation& obs, int cube_count) {
  if (obs.size() != observation_size(cube_count)) {
    throw Error(ErrorCode::DimensionMismatch,
                "cubes observation has " + std::to_string(obs.size()) + " entries, expected " +
                    std::to_string(observation_size(cube_count)));
  }
  ObservationView view;
  view.agent = {static_cast<int>(obs[0]), static_cast<int>(obs[1])};
  view.target_color = static_cast<int>(obs.values.back());
  view.has_positions = obs[2] != kMaskSentinel;
  view.has_colors = view.has_positions && obs[4] != kMaskSentinel;
  if (view.has_positions) {
    for (int i = 0; i < cube_count; ++i) {
      const std::size_t base = 2 + 3 * static_cast<std::size_t>(i);
      view.cubes.push_back({{static_cast<int>(obs[base]), static_cast<int>(obs[base + 1])},
                            static_cast<int>(obs[base + 2])});
    }
  }
  return view;
}

CubesEnv::CubesEnv(const EnvConfig& config) : config_(validate_config(config)) {
  if (config_.family != Family::ColorCubes) {
    throw Error(ErrorCode::FamilyMismatch, "CubesEnv needs a cubes config");
  }
  reset(config_.seed);
  has_reset_ = false;
}

Cell CubesEnv::random_free_cell(RngStream& rng) const {
  const int g = config_.grid_size;
  std::vector<Cell> free;
  free.reserve(static_cast<std::size_t>(g * g));
  for (int y = 0; y < g; ++y) {
    for (int x = 0; x < g; ++x) {
      if (state_.cube_at({x, y}) < 0) free.push_back({x, y});
    }
  }
  return free[rng.below(free.size())];
}

void CubesEnv::teleport(int cube, RngStream& rng) {
  state_.cube_pos[static_cast<std::size_t>(cube)] = random_free_cell(rng);
}

int CubesEnv::sample_next_target(int previous) {
  const auto n = static_cast<std::uint64_t>(config_.cube_count);
  if (config_.target_resampling == TargetResampling::Any || n == 1) {
    return static_cast<int>(target_rng_.below(n));
  }
  const int r = static_cast<int>(target_rng_.below(n - 1));
  return r < previous ? r : r + 1;
}

Observation CubesEnv::reset(std::uint64_t seed) {
  layout_rng_ = RngStream(seed, Stream::Layout);
  teleport_rng_ = RngStream(seed, Stream::Teleport);
  target_rng_ = RngStream(seed, Stream::Target);

  const int g = config_.grid_size;
  const int n = config_.cube_count;

  // Partial Fisher-Yates over the grid cells picks n distinct cube cells.
  std::vector<int> cells(static_cast<std::size_t>(g * g));
  std::iota(cells.begin(), cells.end(), 0);
  state_ = State{};
  for (int i = 0; i < n; ++i) {
    const auto j = static_cast<std::size_t>(i) + layout_rng_.below(cells.size() - i);
    std::swap(cells[static_cast<std::size_t>(i)], cells[j]);
    state_.cube_pos.push_back({cells[static_cast<std::size_t>(i)] % g, cells[static_cast<std::size_t>(i)] / g});
  }
  state_.agent = random_free_cell(layout_rng_);

  state_.cube_color.resize(static_cast<std::size_t>(n));
  std::iota(state_.cube_color.begin(), state_.cube_color.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const auto j = layout_rng_.below(static_cast<std::uint64_t>(i) + 1);
    std::swap(state_.cube_color[static_cast<std::size_t>(i)], state_.cube_color[j]);
  }

  state_.target_color = static_cast<int>(target_rng_.below(static_cast<std::uint64_t>(n)));
  state_.pending_update = PendingUpdate::Full;
  has_reset_ = true;
  return observe();
}

Observation CubesEnv::observe() {
  Observation obs = render_observation(state_);
  state_.pending_update = PendingUpdate::None;
  return obs;
}

StepResult CubesEnv::step(int action) {
  if (action < 0 || action >= kActionCount) {
    throw Error(ErrorCode::InvalidAction, "cubes action " + std::to_string(action));
  }
  return step(static_cast<Action>(action));
}

StepResult CubesEnv::step(Action action) {
  if (!has_reset_) reset(config_.seed);
  if (state_.done) throw Error(ErrorCode::SteppedAfterDone, "cubes episode already ended");

  StepResult r;
  const int target_cube = state_.cube_with_color(state_.target_color);
  const Cell target_cell = state_.cube_pos[static_cast<std::size_t>(target_cube)];
  bool interaction_success = false;

  if (action == Action::Interact) {
    if (state_.agent == target_cell) {
      interaction_success = true;
      r.reward = kInteractReward;
      ++state_.subepisodes_done;
      teleport(target_cube, teleport_rng_);
      if (state_.subepisodes_done < config_.subepisode_count) {
        state_.target_color = sample_next_target(state_.target_color);
      }
      state_.pending_update = PendingUpdate::Full;
    } else {
      r.reward = kPenalty;
    }
  } else {
    const Cell next = apply_move(state_.agent, action, config_.grid_size);
    if (manhattan(next, target_cell) > manhattan(state_.agent, target_cell)) r.reward = kPenalty;
    state_.agent = next;
  }

  // At most one teleport per step, never of the current target, and only when
  // the step did not complete a phase.
  if (!interaction_success && config_.cube_count > 1 &&
      teleport_rng_.bernoulli(config_.teleport_prob)) {
    auto pick = static_cast<int>(teleport_rng_.below(static_cast<std::uint64_t>(config_.cube_count - 1)));
    if (pick >= target_cube) ++pick;
    teleport(pick, teleport_rng_);
    state_.pending_update =
        config_.mode == Mode::Extreme ? PendingUpdate::PositionsOnly : PendingUpdate::Full;
    r.info[info_key::kTeleportOccurred] = 1.0;
  }

  ++state_.steps_elapsed;
  r.terminated = state_.subepisodes_done == config_.subepisode_count;
  r.truncated = !r.terminated && state_.steps_elapsed >= config_.step_limit();
  state_.done = r.terminated || r.truncated;

  if (interaction_success) r.info[info_key::kInteractionSuccess] = 1.0;
  r.info[info_key::kFullStateUpdate] = state_.pending_update == PendingUpdate::Full ? 1.0 : 0.0;
  r.info[info_key::kPositionsUpdate] =
      state_.pending_update == PendingUpdate::PositionsOnly ? 1.0 : 0.0;
  r.info[info_key::kSuccess] = r.terminated ? 1.0 : 0.0;
  r.obs = observe();
  return r;
}

std::string CubesEnv::action_name(int action) const {
  if (action < 0 || action >= kActionCount) return "?";
  return std::string(to_string(static_cast<Action>(action)));
}

std::string CubesEnv::render() const {
  const int g = config_.grid_size;
  std::vector<std::string> rows(static_cast<std::size_t>(g), std::string(static_cast<std::size_t>(g), '.'));
  for (std::size_t i = 0; i < state_.cube_pos.size(); ++i) {
    const Cell c = state_.cube_pos[i];
    rows[static_cast<std::size_t>(c.y)][static_cast<std::size_t>(c.x)] =
        static_cast<char>('0' + state_.cube_color[i] % 10);
  }
  rows[static_cast<std::size_t>(state_.agent.y)][static_cast<std::size_t>(state_.agent.x)] = '@';
  std::ostringstream out;
  out << "target=" << state_.target_color << " phase=" << state_.subepisodes_done << "/"
      << config_.subepisode_count << "\n";
  for (const auto& row : rows) out << row << "\n";
  return out.str();
}

}  // namespace memrw::cubes
