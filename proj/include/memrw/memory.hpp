#pragma once

#include <cstddef>
#include <vector>

#include "memrw/types.hpp"

namespace memrw {

/// Recurrent memory m_t.
struct MemoryState {
  std::vector<double> values;

  [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
  bool operator==(const MemoryState&) const = default;
};

/// The per-step input eta_t: current observation and the previous action
/// (-1 before the first action).
struct MemoryInput {
  Observation observation;
  int action = -1;
};

/// A memory update factored into three stages,
///   m' = integrate(forget(m, eta), encode(eta)),
/// where forget selects what survives of the old memory, encode maps the new
/// input into memory space and integrate writes the two together. Gated cells
/// compute their forget mask from the input, hence forget sees eta too.
class MemoryCell {
 public:
  virtual ~MemoryCell() = default;

  [[nodiscard]] virtual std::size_t width() const = 0;
  [[nodiscard]] virtual MemoryState initial_state() const {
    return MemoryState{std::vector<double>(width(), 0.0)};
  }

  [[nodiscard]] virtual MemoryState forget(const MemoryState& m, const MemoryInput& eta) const = 0;
  [[nodiscard]] virtual MemoryState encode(const MemoryInput& eta) const = 0;
  [[nodiscard]] virtual MemoryState integrate(const MemoryState& retained,
                                              const MemoryState& encoded) const = 0;
};

/// Throws Error(DimensionMismatch) when m does not match the cell width.
MemoryState memory_update(const MemoryState& m, const MemoryInput& eta, const MemoryCell& cell);

/// F = id, E = 0, W = sum.
class IdentityCell final : public MemoryCell {
 public:
  explicit IdentityCell(std::size_t width) : width_(width) {}
  [[nodiscard]] std::size_t width() const override { return width_; }
  [[nodiscard]] MemoryState forget(const MemoryState& m, const MemoryInput&) const override;
  [[nodiscard]] MemoryState encode(const MemoryInput& eta) const override;
  [[nodiscard]] MemoryState integrate(const MemoryState& retained,
                                      const MemoryState& encoded) const override;

 private:
  std::size_t width_;
};

/// F = 0, W = second argument: the new memory is the first `width` entries
/// of the observation (zero padded).
class EraserCell final : public MemoryCell {
 public:
  explicit EraserCell(std::size_t width) : width_(width) {}
  [[nodiscard]] std::size_t width() const override { return width_; }
  [[nodiscard]] MemoryState forget(const MemoryState& m, const MemoryInput&) const override;
  [[nodiscard]] MemoryState encode(const MemoryInput& eta) const override;
  [[nodiscard]] MemoryState integrate(const MemoryState& retained,
                                      const MemoryState& encoded) const override;

 private:
  std::size_t width_;
};

}  // namespace memrw
