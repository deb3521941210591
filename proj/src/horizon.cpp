#include "memrw/horizon.hpp"

#include <algorithm>
#include <string>

#include "memrw/episode.hpp"
#include "memrw/error.hpp"

namespace memrw {

EventWindow make_event_window(int event_t, int duration, int decision_t) {
  if (duration < 1 || decision_t < event_t + duration) {
    throw Error(ErrorCode::InvalidConfig,
                "event window needs duration >= 1 and decision_t >= event_t + duration (got " +
                    std::to_string(event_t) + ", " + std::to_string(duration) + ", " +
                    std::to_string(decision_t) + ")");
  }
  return EventWindow{event_t, duration, decision_t};
}

int correlation_horizon(const EventWindow& w) { return w.decision_t - w.event_t - w.duration + 1; }

bool is_memory_intensive(std::span<const EventWindow> windows) {
  if (windows.empty()) return false;
  return std::ranges::all_of(windows, [](const EventWindow& w) { return correlation_horizon(w) > 1; });
}

std::vector<EventWindow> tmaze_event_windows(const EpisodeLog& log) {
  if (log.config.family != Family::TMaze) {
    throw Error(ErrorCode::FamilyMismatch, "event windows are defined for tmaze traces");
  }
  std::vector<EventWindow> windows;
  int cue_t = -1;
  int corridor = -1;
  for (const StepRecord& rec : log.steps) {
    const auto& info = rec.result.info;
    const int c = static_cast<int>(info.at(info_key::kCorridor));
    if (c != corridor) {
      corridor = c;
      cue_t = -1;
    }
    // The cue is shown for one step at the corridor start.
    if (cue_t < 0 && rec.result.flag(info_key::kCueVisible)) cue_t = rec.t;
    const bool decided =
        rec.result.flag(info_key::kJunctionCorrect) || rec.result.flag(info_key::kJunctionWrong);
    if (decided && cue_t >= 0) windows.push_back(make_event_window(cue_t, 1, rec.t));
  }
  return windows;
}

}  // namespace memrw
