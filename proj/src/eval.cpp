#include "memrw/eval.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "memrw/episode.hpp"
#include "memrw/error.hpp"
#include "memrw/rng.hpp"

namespace memrw::eval {

std::string_view to_string(Generalization g) {
  switch (g) {
    case Generalization::Matched: return "matched";
    case Generalization::Interpolation: return "interpolation";
    case Generalization::Extrapolation: return "extrapolation";
    case Generalization::Mixed: return "mixed";
  }
  return "mixed";
}

Generalization parse_generalization(std::string_view s) {
  if (s == "matched") return Generalization::Matched;
  if (s == "interpolation") return Generalization::Interpolation;
  if (s == "extrapolation") return Generalization::Extrapolation;
  if (s == "mixed") return Generalization::Mixed;
  throw Error(ErrorCode::MalformedReport, "unknown generalization tag '" + std::string(s) + "'");
}

Generalization classify_generalization(const EnvConfig& train, const EnvConfig& eval) {
  if (train.family != eval.family) {
    throw Error(ErrorCode::FamilyMismatch, "cannot compare " + std::string(to_string(train.family)) +
                                               " with " + std::string(to_string(eval.family)));
  }
  int a_train = 0, b_train = 0, a_eval = 0, b_eval = 0;
  if (train.family == Family::TMaze) {
    if (train.effective_regime() != eval.effective_regime()) return Generalization::Mixed;
    a_train = train.corridor_length;
    b_train = train.corridor_count;
    a_eval = eval.corridor_length;
    b_eval = eval.corridor_count;
  } else {
    if (train.mode != eval.mode || train.grid_size != eval.grid_size) return Generalization::Mixed;
    a_train = train.cube_count;
    b_train = train.subepisode_count;
    a_eval = eval.cube_count;
    b_eval = eval.subepisode_count;
  }
  const bool any_less = a_eval < a_train || b_eval < b_train;
  const bool any_greater = a_eval > a_train || b_eval > b_train;
  if (!any_less && !any_greater) return Generalization::Matched;
  if (any_less && !any_greater) return Generalization::Interpolation;
  if (any_greater && !any_less) return Generalization::Extrapolation;
  return Generalization::Mixed;
}

std::uint64_t episode_seed(std::uint64_t base_seed, int run, int episode) {
  return hash_seed(base_seed, static_cast<std::uint64_t>(run), static_cast<std::uint64_t>(episode));
}

MeanSem mean_sem(const std::vector<double>& values) {
  MeanSem out;
  if (values.empty()) return out;
  if (std::ranges::all_of(values, [&](double v) { return v == values.front(); })) {
    out.mean = values.front();
    return out;
  }
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / static_cast<double>(values.size());
  if (values.size() < 2) return out;
  double ss = 0.0;
  for (double v : values) ss += (v - out.mean) * (v - out.mean);
  const double n = static_cast<double>(values.size());
  out.sem = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
  return out;
}

bool EvalReport::operator==(const EvalReport& o) const {
  if (!(agent == o.agent && train_config == o.train_config && n_runs == o.n_runs &&
        episodes_per_run == o.episodes_per_run && base_seed == o.base_seed &&
        cells.size() == o.cells.size())) {
    return false;
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& a = cells[i];
    const auto& b = o.cells[i];
    if (!(a.config == b.config && a.tag == b.tag && a.success_mean == b.success_mean &&
          a.success_sem == b.success_sem && a.run_success == b.run_success &&
          a.progress_histogram == b.progress_histogram && a.mean_return == b.mean_return &&
          a.mean_progress == b.mean_progress && a.episodes == b.episodes)) {
      return false;
    }
  }
  return true;
}

namespace {

EpisodeOutcome play(const EnvConfig& config, std::uint64_t seed, const EnvFactory& env_factory,
                    const AgentFactory& agent_factory) {
  auto env = env_factory(config);
  auto agent = agent_factory(config);
  if (agent->family() != env->family()) {
    throw Error(ErrorCode::AgentEnvMismatch, "agent '" + agent->name() + "' cannot drive " +
                                                 config_label(config));
  }
  Observation obs = env->reset(seed);
  agent->reset(seed);
  EpisodeOutcome out;
  while (!env->done()) {
    const StepResult r = env->step(agent->act(obs));
    out.total_return += r.reward;
    obs = r.obs;
  }
  out.success = env->succeeded();
  out.progress = env->progress();
  return out;
}

/// Runs `count` jobs on up to `workers` threads; job i writes slot i.
template <typename Job>
void parallel_for(int count, int workers, Job&& job) {
  workers = std::clamp(workers, 1, std::max(1, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          job(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

EvalReport run_eval(const EvalSpec& spec, const EnvFactory& env_factory,
                    const AgentFactory& agent_factory) {
  if (spec.n_runs < 1 || spec.episodes_per_run < 1) {
    throw Error(ErrorCode::InvalidConfig, "n_runs and episodes_per_run must be >= 1");
  }
  EvalReport report;
  report.agent = spec.agent;
  report.train_config = validate_config(spec.train_config);
  report.n_runs = spec.n_runs;
  report.episodes_per_run = spec.episodes_per_run;
  report.base_seed = spec.base_seed;

  std::vector<EnvConfig> configs = spec.eval_configs;
  if (configs.empty()) configs.push_back(spec.train_config);

  for (const EnvConfig& raw : configs) {
    const EnvConfig config = validate_config(raw);
    EvalCell cell;
    cell.config = config;
    cell.tag = classify_generalization(report.train_config, config);

    const int total = spec.n_runs * spec.episodes_per_run;
    std::vector<EpisodeOutcome> outcomes(static_cast<std::size_t>(total));
    parallel_for(total, spec.workers, [&](int i) {
      const int run = i / spec.episodes_per_run;
      const int episode = i % spec.episodes_per_run;
      outcomes[static_cast<std::size_t>(i)] =
          play(config, episode_seed(spec.base_seed, run, episode), env_factory, agent_factory);
    });

    const int capacity = config.family == Family::TMaze ? config.corridor_count
                                                        : config.subepisode_count;
    cell.progress_histogram.assign(static_cast<std::size_t>(capacity) + 1, 0);
    double return_sum = 0.0;
    double progress_sum = 0.0;
    for (int run = 0; run < spec.n_runs; ++run) {
      int successes = 0;
      for (int e = 0; e < spec.episodes_per_run; ++e) {
        const auto& o = outcomes[static_cast<std::size_t>(run * spec.episodes_per_run + e)];
        successes += o.success ? 1 : 0;
        ++cell.progress_histogram[static_cast<std::size_t>(o.progress)];
        return_sum += o.total_return;
        progress_sum += o.progress;
      }
      cell.run_success.push_back(static_cast<double>(successes) / spec.episodes_per_run);
    }
    const MeanSem ms = mean_sem(cell.run_success);
    cell.success_mean = ms.mean;
    cell.success_sem = ms.sem;
    cell.episodes = total;
    cell.mean_return = return_sum / total;
    cell.mean_progress = progress_sum / total;
    report.cells.push_back(std::move(cell));
  }
  return report;
}

EvalReport run_eval(const EvalSpec& spec) {
  return run_eval(
      spec, [](const EnvConfig& c) { return make_environment(c); },
      [&](const EnvConfig& c) { return make_agent(spec.agent, c); });
}

GeneralizationGrid run_generalization_grid(const std::vector<EnvConfig>& train_configs,
                                           const std::vector<EnvConfig>& eval_configs,
                                           const EvalSpec& base) {
  GeneralizationGrid grid;
  grid.agent = base.agent;
  for (const auto& train : train_configs) {
    EvalSpec spec = base;
    spec.train_config = train;
    spec.eval_configs.clear();
    for (const auto& e : eval_configs) {
      if (e.family == train.family) spec.eval_configs.push_back(e);
    }
    grid.rows.push_back(run_eval(spec));
  }
  return grid;
}

void to_json(nlohmann::json& j, const EvalCell& c) {
  j = {{"config", c.config},
       {"tag", to_string(c.tag)},
       {"success_mean", c.success_mean},
       {"success_sem", c.success_sem},
       {"run_success", c.run_success},
       {"progress_histogram", c.progress_histogram},
       {"mean_return", c.mean_return},
       {"mean_progress", c.mean_progress},
       {"episodes", c.episodes}};
}

void from_json(const nlohmann::json& j, EvalCell& c) {
  j.at("config").get_to(c.config);
  c.tag = parse_generalization(j.at("tag").get<std::string>());
  j.at("success_mean").get_to(c.success_mean);
  j.at("success_sem").get_to(c.success_sem);
  j.at("run_success").get_to(c.run_success);
  j.at("progress_histogram").get_to(c.progress_histogram);
  j.at("mean_return").get_to(c.mean_return);
  j.at("mean_progress").get_to(c.mean_progress);
  j.at("episodes").get_to(c.episodes);
}

void to_json(nlohmann::json& j, const EvalReport& r) {
  j = {{"agent", r.agent},
       {"train_config", r.train_config},
       {"n_runs", r.n_runs},
       {"episodes_per_run", r.episodes_per_run},
       {"base_seed", r.base_seed},
       {"cells", r.cells}};
}

void from_json(const nlohmann::json& j, EvalReport& r) {
  j.at("agent").get_to(r.agent);
  j.at("train_config").get_to(r.train_config);
  j.at("n_runs").get_to(r.n_runs);
  j.at("episodes_per_run").get_to(r.episodes_per_run);
  j.at("base_seed").get_to(r.base_seed);
  j.at("cells").get_to(r.cells);
}

}  // namespace memrw::eval
