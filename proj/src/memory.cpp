#include "memrw/memory.hpp"

#include <algorithm>
#include <string>

#include "memrw/error.hpp"

namespace memrw {

MemoryState memory_update(const MemoryState& m, const MemoryInput& eta, const MemoryCell& cell) {
  if (m.size() != cell.width()) {
    throw Error(ErrorCode::DimensionMismatch, "memory has width " + std::to_string(m.size()) +
                                                  ", cell expects " + std::to_string(cell.width()));
  }
  return cell.integrate(cell.forget(m, eta), cell.encode(eta));
}

MemoryState IdentityCell::forget(const MemoryState& m, const MemoryInput&) const { return m; }

MemoryState IdentityCell::encode(const MemoryInput&) const {
  return MemoryState{std::vector<double>(width_, 0.0)};
}

MemoryState IdentityCell::integrate(const MemoryState& retained, const MemoryState& encoded) const {
  MemoryState out = retained;
  for (std::size_t i = 0; i < out.size(); ++i) out.values[i] += encoded.values[i];
  return out;
}

MemoryState EraserCell::forget(const MemoryState& m, const MemoryInput&) const {
  return MemoryState{std::vector<double>(m.size(), 0.0)};
}

MemoryState EraserCell::encode(const MemoryInput& eta) const {
  MemoryState out{std::vector<double>(width_, 0.0)};
  const std::size_t n = std::min(width_, eta.observation.size());
  std::copy_n(eta.observation.values.begin(), n, out.values.begin());
  return out;
}

MemoryState EraserCell::integrate(const MemoryState&, const MemoryState& encoded) const {
  return encoded;
}

}  // namespace memrw
