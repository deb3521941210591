#include "memrw/environment.hpp"

#include "memrw/cubes.hpp"
#include "memrw/tmaze.hpp"

namespace memrw {

std::unique_ptr<Environment> make_environment(const EnvConfig& config) {
  const EnvConfig valid = validate_config(config);
  if (valid.family == Family::TMaze) return std::make_unique<tmaze::TMazeEnv>(valid);
  return std::make_unique<cubes::CubesEnv>(valid);
}

}  // namespace memrw
