#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "memrw/config.hpp"
#include "memrw/types.hpp"

namespace memrw {

/// Episodic environment contract shared by both benchmark families.
///
/// An instance is single-threaded. Separate instances share nothing and may be
/// stepped concurrently.
class Environment {
 public:
  virtual ~Environment() = default;

  virtual Observation reset(std::uint64_t seed) = 0;
  /// Throws Error(SteppedAfterDone) once the episode has ended and
  /// Error(InvalidAction) for an out-of-range action index.
  virtual StepResult step(int action) = 0;

  [[nodiscard]] virtual const EnvConfig& config() const = 0;
  [[nodiscard]] virtual std::size_t observation_size() const = 0;
  [[nodiscard]] virtual int action_count() const = 0;
  [[nodiscard]] virtual std::string action_name(int action) const = 0;

  [[nodiscard]] virtual bool done() const = 0;
  /// All junctions passed (T-Maze) or all K sub-episodes completed (Cubes).
  [[nodiscard]] virtual bool succeeded() const = 0;
  /// Corridors passed or sub-episodes completed so far.
  [[nodiscard]] virtual int progress() const = 0;
  /// n for T-Maze, K for Color-Cubes.
  [[nodiscard]] virtual int progress_capacity() const = 0;

  /// Human-readable state dump for debugging traces.
  [[nodiscard]] virtual std::string render() const = 0;

  [[nodiscard]] Family family() const { return config().family; }
};

/// Validates the config and builds the matching environment.
std::unique_ptr<Environment> make_environment(const EnvConfig& config);

}  // namespace memrw
