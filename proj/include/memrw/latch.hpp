#pragma once

#include <array>
#include <cstddef>

#include "memrw/memory.hpp"

namespace memrw {

/// Pre-activation magnitude of a saturated gate. sigmoid(20) is within
/// 2.1e-9 of one.
inline constexpr double kGateSaturation = 20.0;

/// Weights of a two-unit gated recurrence (GRU-style update gate, no reset
/// gate) over the two cue inputs:
///   z  = sigmoid(Wz x + bz)          update gate
///   c  = tanh(Wc x + bc)             candidate
///   m' = (1 - z) * m + z * c
/// Unit 0 stands for Left, unit 1 for Right.
struct LatchCellWeights {
  std::array<std::array<double, 2>, 2> update_w{};
  std::array<double, 2> update_b{};
  std::array<std::array<double, 2>, 2> candidate_w{};
  std::array<double, 2> candidate_b{};
};

/// Closed-form weights: a one-hot cue saturates the update gate open and the
/// candidate to (+1, -1) or (-1, +1); an all-zero cue keeps the gate shut.
LatchCellWeights latch_cell_construct();

/// The latch as a MemoryCell: forget = (1 - z) * m, encode = z * c,
/// integrate = sum. Reads the cue from observation entries 0 and 1.
class LatchCell final : public MemoryCell {
 public:
  explicit LatchCell(LatchCellWeights weights) : w_(weights) {}

  [[nodiscard]] std::size_t width() const override { return 2; }
  [[nodiscard]] MemoryState forget(const MemoryState& m, const MemoryInput& eta) const override;
  [[nodiscard]] MemoryState encode(const MemoryInput& eta) const override;
  [[nodiscard]] MemoryState integrate(const MemoryState& retained,
                                      const MemoryState& encoded) const override;

  [[nodiscard]] std::array<double, 2> update_gate(double cue_left, double cue_right) const;
  [[nodiscard]] std::array<double, 2> candidate(double cue_left, double cue_right) const;
  [[nodiscard]] const LatchCellWeights& weights() const { return w_; }

 private:
  LatchCellWeights w_;
};

/// 0 (Left) or 1 (Right); ties resolve to Left.
int latch_argmax(const MemoryState& m);

}  // namespace memrw
