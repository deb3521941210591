#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace memrw {

/// Reserved value for an observation entry the agent is not allowed to see.
inline constexpr double kMaskSentinel = -1.0;

/// Flat, fixed-width observation vector. Layout is family specific.
struct Observation {
  std::vector<double> values;

  [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
  bool operator==(const Observation&) const = default;
};

/// Step annotations. Boolean flags are stored as 0/1.
using Info = std::map<std::string, double>;

namespace info_key {
inline constexpr const char* kJunctionCorrect = "junction_correct";
inline constexpr const char* kJunctionWrong = "junction_wrong";
inline constexpr const char* kCueVisible = "cue_visible";
inline constexpr const char* kCorridor = "corridor";
inline constexpr const char* kPosition = "position";
inline constexpr const char* kTeleportOccurred = "teleport_occurred";
inline constexpr const char* kFullStateUpdate = "full_state_update";
inline constexpr const char* kPositionsUpdate = "positions_update";
inline constexpr const char* kInteractionSuccess = "interaction_success";
inline constexpr const char* kSuccess = "success";
}  // namespace info_key

struct StepResult {
  Observation obs;
  double reward = 0.0;
  bool terminated = false;
  bool truncated = false;
  Info info;

  [[nodiscard]] bool done() const noexcept { return terminated || truncated; }
  [[nodiscard]] bool flag(const std::string& key) const {
    auto it = info.find(key);
    return it != info.end() && it->second != 0.0;
  }
};

}  // namespace memrw
