#pragma once

#include <span>
#include <vector>

namespace memrw {

struct EpisodeLog;

/// An informative event starting at `event_t` and lasting `duration` steps,
/// and the later decision at `decision_t` that depends on it.
/// Requires duration >= 1 and decision_t >= event_t + duration.
struct EventWindow {
  int event_t = 0;
  int duration = 1;
  int decision_t = 1;
};

/// Throws Error(InvalidConfig) when the window invariants do not hold.
EventWindow make_event_window(int event_t, int duration, int decision_t);

/// decision_t - event_t - duration + 1. Always >= 1.
int correlation_horizon(const EventWindow& w);

/// True when every window has a horizon greater than one (and there is at
/// least one window).
bool is_memory_intensive(std::span<const EventWindow> windows);

/// One window per corridor that reached its junction decision: the cue is
/// shown for one step at the corridor start and the decision is the turn
/// taken at the junction.
std::vector<EventWindow> tmaze_event_windows(const EpisodeLog& log);

}  // namespace memrw
