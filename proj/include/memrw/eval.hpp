#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "memrw/agents.hpp"
#include "memrw/config.hpp"
#include "memrw/environment.hpp"

namespace memrw::eval {

enum class Generalization { Matched, Interpolation, Extrapolation, Mixed };

std::string_view to_string(Generalization g);
Generalization parse_generalization(std::string_view s);

/// Compares (l, n) for T-Maze and (N, K) for Color-Cubes. A regime or mode
/// difference is reported as Mixed. Throws Error(FamilyMismatch).
Generalization classify_generalization(const EnvConfig& train, const EnvConfig& eval);

struct EvalSpec {
  EnvConfig train_config;
  std::vector<EnvConfig> eval_configs;  // train_config alone when empty
  int n_runs = 10;
  int episodes_per_run = 100;
  std::string agent = "oracle";
  std::uint64_t base_seed = 0;
  int workers = 1;
};

/// Seed of episode `episode` in run `run`. Independent of the agent, so every
/// agent faces the same layouts.
std::uint64_t episode_seed(std::uint64_t base_seed, int run, int episode);

struct EvalCell {
  EnvConfig config;
  Generalization tag = Generalization::Matched;
  double success_mean = 0.0;
  double success_sem = 0.0;
  std::vector<double> run_success;         // one rate per run
  std::vector<std::int64_t> progress_histogram;  // index = corridors / sub-episodes completed
  double mean_return = 0.0;
  double mean_progress = 0.0;
  long episodes = 0;
};

struct EvalReport {
  std::string agent;
  EnvConfig train_config;
  int n_runs = 0;
  int episodes_per_run = 0;
  std::uint64_t base_seed = 0;
  std::vector<EvalCell> cells;

  bool operator==(const EvalReport& other) const;
};

/// Mean and standard error (sample std / sqrt(n)); sem is 0 for fewer than
/// two values.
struct MeanSem {
  double mean = 0.0;
  double sem = 0.0;
};
MeanSem mean_sem(const std::vector<double>& values);

using EnvFactory = std::function<std::unique_ptr<Environment>(const EnvConfig&)>;
using AgentFactory = std::function<std::unique_ptr<Agent>(const EnvConfig&)>;

/// Per-episode outcome used for aggregation.
struct EpisodeOutcome {
  bool success = false;
  int progress = 0;
  double total_return = 0.0;
};

/// Runs n_runs x episodes_per_run episodes per eval config. Episodes can fan
/// out across `spec.workers` threads; results are folded in (run, episode)
/// order so the report does not depend on the worker count.
/// Throws Error(AgentEnvMismatch) when the agent family differs from the env.
EvalReport run_eval(const EvalSpec& spec, const EnvFactory& env_factory,
                    const AgentFactory& agent_factory);

/// run_eval with make_environment and make_agent(spec.agent, ...).
EvalReport run_eval(const EvalSpec& spec);

/// Train config x eval config matrix of reports for one agent.
struct GeneralizationGrid {
  std::string agent;
  std::vector<EvalReport> rows;  // one per train config
};

/// Evaluates every train config against every eval config of the same family.
GeneralizationGrid run_generalization_grid(const std::vector<EnvConfig>& train_configs,
                                           const std::vector<EnvConfig>& eval_configs,
                                           const EvalSpec& base);

void to_json(nlohmann::json& j, const EvalCell& cell);
void from_json(const nlohmann::json& j, EvalCell& cell);
void to_json(nlohmann::json& j, const EvalReport& report);
void from_json(const nlohmann::json& j, EvalReport& report);

}  // namespace memrw::eval

namespace memrw {
using eval::EvalReport;
}  // namespace memrw
