#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "memrw/config.hpp"
#include "memrw/cubes.hpp"
#include "memrw/latch.hpp"
#include "memrw/rng.hpp"
#include "memrw/tmaze.hpp"
#include "memrw/types.hpp"

namespace memrw {

/// A policy with internal state. Agents only see observations, never
/// environment internals. Stochastic agents draw from their own stream seeded
/// in reset(), so a run is a pure function of (observations, seed).
class Agent {
 public:
  virtual ~Agent() = default;

  virtual void reset(std::uint64_t seed) = 0;
  virtual int act(const Observation& obs) = 0;

  [[nodiscard]] virtual Family family() const = 0;
  [[nodiscard]] virtual std::string name() const = 0;
};

namespace agents {

/// Cue stored in a T-Maze observation, if one is visible.
std::optional<tmaze::Direction> visible_cue(const Observation& obs);
bool at_junction(const Observation& obs);

/// Overwrites its stored cue whenever a new one appears; walks to the junction
/// and turns the stored way.
class TMazeOracle final : public Agent {
 public:
  void reset(std::uint64_t) override { cue_.reset(); }
  int act(const Observation& obs) override;
  [[nodiscard]] Family family() const override { return Family::TMaze; }
  [[nodiscard]] std::string name() const override { return "oracle"; }

 private:
  std::optional<tmaze::Direction> cue_;
};

/// Keeps only the first cue of the episode and turns that way at every junction.
class StaleAgent final : public Agent {
 public:
  void reset(std::uint64_t) override { cue_.reset(); }
  int act(const Observation& obs) override;
  [[nodiscard]] Family family() const override { return Family::TMaze; }
  [[nodiscard]] std::string name() const override { return "stale"; }

 private:
  std::optional<tmaze::Direction> cue_;
};

/// Memoryless: forward in corridors, a fair coin at junctions.
class RandomTurnAgent final : public Agent {
 public:
  void reset(std::uint64_t seed) override { rng_ = RngStream(seed, Stream::Agent); }
  int act(const Observation& obs) override;
  [[nodiscard]] Family family() const override { return Family::TMaze; }
  [[nodiscard]] std::string name() const override { return "random"; }

 private:
  RngStream rng_;
};

/// Drives the constructed latch cell with the observation stream and turns
/// by the argmax of its state at junctions.
class LatchAgent final : public Agent {
 public:
  LatchAgent() : cell_(latch_cell_construct()) {}
  void reset(std::uint64_t) override;
  int act(const Observation& obs) override;
  [[nodiscard]] Family family() const override { return Family::TMaze; }
  [[nodiscard]] std::string name() const override { return "latch"; }
  [[nodiscard]] const MemoryState& memory() const { return memory_; }

 private:
  LatchCell cell_;
  MemoryState memory_;
  int last_action_ = -1;
};

/// Greedy Manhattan step from `from` toward `to`, x axis first.
cubes::Action step_toward(const cubes::Cell& from, const cubes::Cell& to);

/// Keeps a full color-position map. Full updates overwrite it; positions-only
/// updates are resolved by set difference against the believed positions.
/// Throws Error(InferenceAmbiguous) if more than one cube appears to have moved.
class CubesOracle final : public Agent {
 public:
  CubesOracle(int cube_count, Mode mode) : cube_count_(cube_count), mode_(mode) {}
  void reset(std::uint64_t) override;
  int act(const Observation& obs) override;
  [[nodiscard]] Family family() const override { return Family::ColorCubes; }
  [[nodiscard]] std::string name() const override { return "oracle"; }

  /// Number of positions-only updates resolved so far (since construction).
  [[nodiscard]] long inferences() const { return inferences_; }
  /// Believed cell of each color; -1/-1 for unknown.
  [[nodiscard]] const std::vector<cubes::Cell>& belief() const { return color_cell_; }

 private:
  void absorb(const cubes::ObservationView& view);

  int cube_count_;
  Mode mode_;
  std::vector<cubes::Cell> color_cell_;
  bool known_ = false;
  long inferences_ = 0;
};

/// Lower bound that keeps only the latest positional update and never
/// infers. While that update carried colors it walks to the target; after a
/// positions-only update it has lost the color mapping, so it random-walks and
/// interacts once on every remembered cube cell it steps onto.
class AmnesiacCubes final : public Agent {
 public:
  explicit AmnesiacCubes(int cube_count) : cube_count_(cube_count) {}
  void reset(std::uint64_t seed) override;
  int act(const Observation& obs) override;
  [[nodiscard]] Family family() const override { return Family::ColorCubes; }
  [[nodiscard]] std::string name() const override { return "amnesiac"; }

 private:
  int cube_count_;
  RngStream rng_;
  std::vector<cubes::Cell> occupied_;
  std::optional<cubes::Cell> target_cell_;
  int last_action_ = -1;
};

}  // namespace agents

/// Names accepted by make_agent.
const std::vector<std::string>& agent_names();

/// Builds the named agent for an environment config. "oracle" resolves to the
/// family's oracle. Throws Error(UnknownAgent) or Error(AgentEnvMismatch).
std::unique_ptr<Agent> make_agent(const std::string& name, const EnvConfig& config);

/// True when `name` has an implementation for `family`.
bool agent_supports(const std::string& name, Family family);

}  // namespace memrw
