#include "memrw/latch.hpp"

#include <cmath>

#include "memrw/error.hpp"

namespace memrw {

namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

std::array<double, 2> cue_of(const MemoryInput& eta) {
  if (eta.observation.size() < 2) {
    throw Error(ErrorCode::DimensionMismatch, "latch cell needs a 2-entry cue in the observation");
  }
  return {eta.observation[0], eta.observation[1]};
}

}  // namespace

LatchCellWeights latch_cell_construct() {
  const double s = kGateSaturation;
  LatchCellWeights w;
  // z = sigmoid(2s * (x0 + x1) - s): -s with no cue, +s with a one-hot cue.
  w.update_w = {{{2 * s, 2 * s}, {2 * s, 2 * s}}};
  w.update_b = {-s, -s};
  // c = tanh(s * (x0 - x1)) for the Left unit and its negation for Right.
  w.candidate_w = {{{s, -s}, {-s, s}}};
  w.candidate_b = {0.0, 0.0};
  return w;
}

std::array<double, 2> LatchCell::update_gate(double cue_left, double cue_right) const {
  std::array<double, 2> z{};
  for (std::size_t i = 0; i < 2; ++i) {
    z[i] = sigmoid(w_.update_w[i][0] * cue_left + w_.update_w[i][1] * cue_right + w_.update_b[i]);
  }
  return z;
}

std::array<double, 2> LatchCell::candidate(double cue_left, double cue_right) const {
  std::array<double, 2> c{};
  for (std::size_t i = 0; i < 2; ++i) {
    c[i] = std::tanh(w_.candidate_w[i][0] * cue_left + w_.candidate_w[i][1] * cue_right +
                     w_.candidate_b[i]);
  }
  return c;
}

MemoryState LatchCell::forget(const MemoryState& m, const MemoryInput& eta) const {
  const auto [l, r] = cue_of(eta);
  const auto z = update_gate(l, r);
  return MemoryState{{(1.0 - z[0]) * m.values[0], (1.0 - z[1]) * m.values[1]}};
}

MemoryState LatchCell::encode(const MemoryInput& eta) const {
  const auto [l, r] = cue_of(eta);
  const auto z = update_gate(l, r);
  const auto c = candidate(l, r);
  return MemoryState{{z[0] * c[0], z[1] * c[1]}};
}

MemoryState LatchCell::integrate(const MemoryState& retained, const MemoryState& encoded) const {
  return MemoryState{{retained.values[0] + encoded.values[0], retained.values[1] + encoded.values[1]}};
}

int latch_argmax(const MemoryState& m) { return m.values[1] > m.values[0] ? 1 : 0; }

}  // namespace memrw
