#include "memrw/cli.hpp"

#include <algorithm>
#include <atomic>
#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "memrw/agents.hpp"
#include "memrw/config_io.hpp"
#include "memrw/episode.hpp"
#include "memrw/error.hpp"
#include "memrw/manifest.hpp"
#include "memrw/report.hpp"

namespace memrw::cli {

namespace fs = std::filesystem;

namespace {

std::atomic<bool> g_interrupted{false};

extern "C" void on_interrupt(int) { g_interrupted = true; }

std::uint64_t default_base_seed() {
  if (const char* env = std::getenv("MEMRW_BASE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidConfig, std::string("MEMRW_BASE_SEED is not an integer: ") + env);
    }
  }
  return 0;
}

bool is_usage_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidDimension:
    case ErrorCode::InvalidProbability:
    case ErrorCode::InvalidRegimeForFamily:
    case ErrorCode::InvalidConfig:
    case ErrorCode::AgentEnvMismatch:
    case ErrorCode::FamilyMismatch:
    case ErrorCode::UnknownAgent:
    case ErrorCode::MalformedReport:
      return true;
    default:
      return false;
  }
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

struct RunOptions {
  std::string env;
  std::string agent = "oracle";
  std::optional<std::uint64_t> seed;
  std::string out = ".";
};

int cmd_run(const RunOptions& opt, std::ostream& out) {
  EnvConfig config = load_config(opt.env);
  if (opt.seed) config.seed = *opt.seed;
  auto agent = make_agent(opt.agent, config);
  auto env = make_environment(config);
  const EpisodeLog log = run_episode(*env, *agent, config.seed);

  out << (config.family == Family::TMaze ? tmaze_trace_dump(log) : cubes_trace_dump(log));
  out << "agent=" << log.agent << " seed=" << log.seed << " return=" << report::fixed2(log.total_return)
      << " progress=" << log.progress << " success=" << (log.success ? "true" : "false") << "\n";
  write_file(fs::path(opt.out) / "episode.json", nlohmann::json(log).dump(2) + "\n");
  return kExitOk;
}

struct SweepOptions {
  std::string manifest;
  std::string agent;
  std::optional<std::uint64_t> seed;
  std::string out = "results";
  int workers = 1;
  bool plots = false;
  std::string format = "both";
};

int cmd_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& err) {
  const std::uint64_t base_seed = opt.seed.value_or(default_base_seed());
  SweepManifest manifest = load_manifest(opt.manifest, base_seed);
  if (manifest.specs.empty()) throw Error(ErrorCode::InvalidConfig, "manifest has no specs");
  if (opt.seed) {
    for (auto& s : manifest.specs) s.base_seed = *opt.seed;
  }
  std::vector<std::string> agents = manifest.agents;
  if (!opt.agent.empty()) agents = {opt.agent};
  if (agents.empty()) throw Error(ErrorCode::InvalidConfig, "no agent given (--agent or manifest agents)");
  for (const auto& a : agents) {
    if (std::find(agent_names().begin(), agent_names().end(), a) == agent_names().end()) {
      throw Error(ErrorCode::UnknownAgent, "unknown agent '" + a + "'");
    }
  }

  g_interrupted = false;
  auto previous = std::signal(SIGINT, on_interrupt);
  std::vector<EvalReport> all;
  bool interrupted = false;
  for (const auto& agent : agents) {
    std::vector<EvalReport> reports;
    for (auto spec : manifest.specs) {
      if (g_interrupted) {
        interrupted = true;
        break;
      }
      if (!agent_supports(agent, spec.train_config.family)) {
        err << "skipping " << config_label(spec.train_config) << ": agent '" << agent
            << "' does not support " << to_string(spec.train_config.family) << "\n";
        continue;
      }
      spec.agent = agent;
      spec.workers = opt.workers;
      reports.push_back(eval::run_eval(spec));
    }
    const fs::path dir(opt.out);
    if (opt.format == "csv" || opt.format == "both") {
      write_file(dir / ("sweep_" + agent + ".csv"), report::to_csv(reports));
    }
    if (opt.format == "json" || opt.format == "both") {
      write_file(dir / ("sweep_" + agent + ".json"), nlohmann::json(reports).dump(2) + "\n");
    }
    all.insert(all.end(), reports.begin(), reports.end());
    if (interrupted) break;
  }
  std::signal(SIGINT, previous);

  out << report::to_csv(all);
  if (opt.plots) {
    for (const auto& p : report::write_plots(report::tmaze_panels(all), fs::path(opt.out) / "plots")) {
      err << "wrote " << p.string() << "\n";
    }
  }
  if (interrupted) {
    err << "interrupted: partial results written to " << opt.out << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

struct ReportOptions {
  std::string results;
  std::string out;
  bool plots = false;
};

int cmd_report(const ReportOptions& opt, std::ostream& out, std::ostream& err) {
  const auto reports = report::load_reports(opt.results);
  if (reports.empty()) throw Error(ErrorCode::MalformedReport, "no report files in " + opt.results);
  const fs::path dir = opt.out.empty() ? fs::path(opt.results) : fs::path(opt.out);
  const auto tmaze = report::tmaze_table_csv(reports);
  const auto cubes = report::cubes_table_csv(reports);
  write_file(dir / "table_tmaze.csv", tmaze);
  write_file(dir / "table_cubes.csv", cubes);
  out << tmaze << "\n" << cubes;
  if (opt.plots) {
    for (const auto& p : report::write_plots(report::tmaze_panels(reports), dir / "plots")) {
      err << "wrote " << p.string() << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Memory-rewriting benchmark engine: Endless T-Maze and Color-Cubes", "memrw"};
  app.require_subcommand(1);

  RunOptions run_opt;
  auto* run_cmd = app.add_subcommand("run", "Run one episode and print its trace");
  run_cmd->add_option("--env", run_opt.env, "Environment config file")->required();
  run_cmd->add_option("--agent", run_opt.agent, "oracle|stale|random|latch|amnesiac");
  run_cmd->add_option("--seed", run_opt.seed, "Episode seed (overrides the config seed)");
  run_cmd->add_option("--out", run_opt.out, "Directory for episode.json");

  SweepOptions sweep_opt;
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate agents over a manifest of configs");
  sweep_cmd->add_option("--manifest", sweep_opt.manifest, "paper_grid, generalization or a JSON file")
      ->required();
  sweep_cmd->add_option("--agent", sweep_opt.agent, "Agent (default: the manifest's agents)");
  sweep_cmd->add_option("--seed", sweep_opt.seed, "Base seed (default MEMRW_BASE_SEED or 0)");
  sweep_cmd->add_option("--out", sweep_opt.out, "Output directory");
  sweep_cmd->add_option("--workers", sweep_opt.workers, "Parallel episode workers")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_flag("--plots", sweep_opt.plots, "Write SVG plots");
  sweep_cmd->add_option("--format", sweep_opt.format, "csv, json or both")
      ->check(CLI::IsMember({"csv", "json", "both"}));

  ReportOptions report_opt;
  auto* report_cmd = app.add_subcommand("report", "Aggregate sweep JSON reports into tables");
  report_cmd->add_option("results", report_opt.results, "Directory of sweep JSON reports")->required();
  report_cmd->add_option("--out", report_opt.out, "Output directory (default: results dir)");
  report_cmd->add_flag("--plots", report_opt.plots, "Write SVG plots");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(run_opt, out);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_opt, out, err);
    return cmd_report(report_opt, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_usage_error(e.code()) ? kExitUsage : kExitRuntime;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace memrw::cli
