#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "memrw/eval.hpp"

namespace memrw {

/// A batch of evaluation specs plus the agents to run them with.
struct SweepManifest {
  std::string name;
  std::vector<eval::EvalSpec> specs;
  std::vector<std::string> agents;
};

/// The T-Maze grid (fixed/uniform x l in {5,10} x n in {1,3,5,10}, matched
/// evaluation) and the three Color-Cubes modes with G=5, N=3, K=3, p=0.3.
SweepManifest paper_grid_manifest(std::uint64_t base_seed);

/// Same T-Maze training set, each evaluated on every n for its own regime
/// and l (interpolation and extrapolation along the corridor count).
SweepManifest generalization_manifest(std::uint64_t base_seed);

/// JSON manifest:
/// {
///   "name": "...", "base_seed": 0, "n_runs": 10, "episodes_per_run": 100,
///   "agents": ["oracle"],
///   "specs": [ {"train": {<config keys>}, "eval": [{<config keys>}, ...]}, ... ]
/// }
/// Every spec is validated before returning. Throws Error(InvalidConfig).
SweepManifest parse_manifest(const nlohmann::json& j, std::uint64_t default_base_seed);

/// `name_or_path` is a bundled manifest name or a JSON file path.
SweepManifest load_manifest(std::string_view name_or_path, std::uint64_t base_seed);

}  // namespace memrw
