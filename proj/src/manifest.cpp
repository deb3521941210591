#include "memrw/manifest.hpp"

#include <fstream>

#include "memrw/episode.hpp"
#include "memrw/error.hpp"

namespace memrw {

namespace {

constexpr int kLengths[] = {5, 10};
constexpr int kCounts[] = {1, 3, 5, 10};
constexpr Regime kRegimes[] = {Regime::Fixed, Regime::Uniform};
constexpr Mode kModes[] = {Mode::Trivial, Mode::Medium, Mode::Extreme};

eval::EvalSpec spec_for(const EnvConfig& train, std::uint64_t base_seed) {
  eval::EvalSpec spec;
  spec.train_config = train;
  spec.base_seed = base_seed;
  return spec;
}

}  // namespace

SweepManifest paper_grid_manifest(std::uint64_t base_seed) {
  SweepManifest m;
  m.name = "paper_grid";
  for (Regime regime : kRegimes) {
    for (int l : kLengths) {
      for (int n : kCounts) m.specs.push_back(spec_for(make_tmaze_config(l, n, regime), base_seed));
    }
  }
  for (Mode mode : kModes) m.specs.push_back(spec_for(make_cubes_config(mode), base_seed));
  m.agents = {"oracle"};
  return m;
}

SweepManifest generalization_manifest(std::uint64_t base_seed) {
  SweepManifest m;
  m.name = "generalization";
  for (Regime regime : kRegimes) {
    for (int l : kLengths) {
      for (int n : kCounts) {
        auto spec = spec_for(make_tmaze_config(l, n, regime), base_seed);
        for (int eval_n : kCounts) spec.eval_configs.push_back(make_tmaze_config(l, eval_n, regime));
        m.specs.push_back(std::move(spec));
      }
    }
  }
  m.agents = {"oracle"};
  return m;
}

SweepManifest parse_manifest(const nlohmann::json& j, std::uint64_t default_base_seed) {
  try {
    if (!j.is_object()) throw Error(ErrorCode::InvalidConfig, "manifest must be a JSON object");
    for (const auto& [key, _] : j.items()) {
      if (key != "name" && key != "base_seed" && key != "n_runs" && key != "episodes_per_run" &&
          key != "agents" && key != "specs") {
        throw Error(ErrorCode::InvalidConfig, "unknown manifest key '" + key + "'");
      }
    }
    SweepManifest m;
    m.name = j.value("name", std::string("manifest"));
    const auto base_seed = j.value("base_seed", default_base_seed);
    const int n_runs = j.value("n_runs", 10);
    const int episodes = j.value("episodes_per_run", 100);
    if (n_runs < 1 || episodes < 1) {
      throw Error(ErrorCode::InvalidConfig, "n_runs and episodes_per_run must be >= 1");
    }
    m.agents = j.value("agents", std::vector<std::string>{});
    if (!j.contains("specs") || !j.at("specs").is_array() || j.at("specs").empty()) {
      throw Error(ErrorCode::InvalidConfig, "manifest has no specs");
    }
    for (const auto& s : j.at("specs")) {
      eval::EvalSpec spec;
      spec.train_config = validate_config(s.at("train").get<EnvConfig>());
      if (s.contains("eval")) {
        for (const auto& e : s.at("eval")) {
          const EnvConfig cfg = validate_config(e.get<EnvConfig>());
          eval::classify_generalization(spec.train_config, cfg);  // family check
          spec.eval_configs.push_back(cfg);
        }
      }
      spec.n_runs = n_runs;
      spec.episodes_per_run = episodes;
      spec.base_seed = base_seed;
      m.specs.push_back(std::move(spec));
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidConfig, std::string("malformed manifest: ") + e.what());
  }
}

SweepManifest load_manifest(std::string_view name_or_path, std::uint64_t base_seed) {
  if (name_or_path == "paper_grid") return paper_grid_manifest(base_seed);
  if (name_or_path == "generalization") return generalization_manifest(base_seed);
  const std::string path(name_or_path);
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidConfig, "cannot open manifest " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidConfig, path + ": " + e.what());
  }
  return parse_manifest(j, base_seed);
}

}  // namespace memrw
