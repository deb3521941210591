#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace memrw {

enum class Family { TMaze, ColorCubes };
enum class Regime { Fixed, Uniform };
enum class Mode { Trivial, Medium, Extreme };

/// How a new target color is drawn after a successful interaction.
enum class TargetResampling {
  ExcludePrevious,  // uniform over all colors except the one just collected
  Any,              // uniform over all colors
};

std::string_view to_string(Family f);
std::string_view to_string(Regime r);
std::string_view to_string(Mode m);
std::string_view to_string(TargetResampling t);

Family parse_family(std::string_view s);
Regime parse_regime(std::string_view s);
Mode parse_mode(std::string_view s);
TargetResampling parse_target_resampling(std::string_view s);

/// Declarative description of one benchmark instance. T-Maze uses
/// corridor_length/corridor_count/regime; Color-Cubes uses the grid fields.
/// Fields belonging to the other family are ignored.
struct EnvConfig {
  Family family = Family::TMaze;
  std::optional<Regime> regime;  // T-Maze only; Fixed when absent
  int corridor_length = 5;       // l_max
  int corridor_count = 1;        // n
  int grid_size = 5;             // G
  int cube_count = 3;            // N
  int subepisode_count = 3;      // K
  double teleport_prob = 0.3;
  Mode mode = Mode::Medium;
  TargetResampling target_resampling = TargetResampling::ExcludePrevious;
  std::optional<int> max_steps;  // family default when absent
  std::uint64_t seed = 0;

  bool operator==(const EnvConfig&) const = default;

  [[nodiscard]] Regime effective_regime() const { return regime.value_or(Regime::Fixed); }
  /// Only meaningful on a validated config.
  [[nodiscard]] int step_limit() const { return max_steps.value_or(0); }
};

/// Validates and normalizes: Trivial mode forces N=K=1, default step limits
/// are filled in (4*n*l_max for T-Maze, K*8*G for Color-Cubes). Throws
/// memrw::Error on invalid input.
EnvConfig validate_config(EnvConfig config);

EnvConfig make_tmaze_config(int corridor_length, int corridor_count,
                            Regime regime = Regime::Fixed, std::uint64_t seed = 0);
/// Color-Cubes defaults: G=5, N=3, K=3, p_teleport=0.3.
EnvConfig make_cubes_config(Mode mode, std::uint64_t seed = 0);

/// Short human-readable identifier, e.g. "tmaze/fixed/l5/n3" or "cubes/medium".
std::string config_label(const EnvConfig& config);

}  // namespace memrw
