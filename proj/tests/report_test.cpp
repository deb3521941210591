#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "memrw/error.hpp"
#include "memrw/manifest.hpp"
#include "memrw/report.hpp"

using namespace memrw;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::vector<EvalReport> tmaze_grid(const std::string& agent, int runs, int episodes) {
  std::vector<EvalReport> out;
  for (auto spec : paper_grid_manifest(0).specs) {
    if (spec.train_config.family != Family::TMaze) continue;
    spec.agent = agent;
    spec.n_runs = runs;
    spec.episodes_per_run = episodes;
    out.push_back(eval::run_eval(spec));
  }
  return out;
}

fs::path fresh_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("memrw_report_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Fixed2, TwoDecimals) {
  EXPECT_EQ(report::fixed2(1.0), "1.00");
  EXPECT_EQ(report::fixed2(0.125), "0.12");
  EXPECT_EQ(report::fixed2(0.2449), "0.24");
  EXPECT_EQ(report::fixed2(-0.0001), "0.00");
}

TEST(Csv, HeaderAndRowsHaveSameWidth) {
  const auto reports = tmaze_grid("oracle", 2, 5);
  const auto csv = lines(report::to_csv(reports));
  ASSERT_EQ(csv.size(), 17u);
  const auto width = count_of(csv[0], ",");
  for (const auto& l : csv) EXPECT_EQ(count_of(l, ","), width) << l;
  EXPECT_NE(csv[1].find("1.00,0.00"), std::string::npos);
}

TEST(TMazeTable, TwoAgentsSixteenConfigs) {
  auto reports = tmaze_grid("oracle", 2, 10);
  const auto stale = tmaze_grid("stale", 2, 10);
  reports.insert(reports.end(), stale.begin(), stale.end());
  const auto table = lines(report::tmaze_table_csv(reports));
  ASSERT_EQ(table.size(), 17u);
  EXPECT_EQ(table[0], "regime,l,n,oracle,stale");
  for (std::size_t i = 1; i < table.size(); ++i) EXPECT_EQ(count_of(table[i], ","), 4u) << table[i];
  EXPECT_EQ(table[1].rfind("fixed,5,1,1.00±0.00,1.00±0.00", 0), 0u) << table[1];
}

TEST(CubesTable, OneRowPerMode) {
  std::vector<EvalReport> reports;
  for (auto spec : paper_grid_manifest(0).specs) {
    if (spec.train_config.family != Family::ColorCubes) continue;
    spec.n_runs = 2;
    spec.episodes_per_run = 5;
    reports.push_back(eval::run_eval(spec));
  }
  const auto table = lines(report::cubes_table_csv(reports));
  ASSERT_EQ(table.size(), 4u);
  EXPECT_EQ(table[0], "mode,oracle");
  EXPECT_EQ(table[1], "trivial,1.00±0.00");
}

TEST(Plots, MatchedOnlyRunHasOnePointPerPanel) {
  const auto panels = report::tmaze_panels(tmaze_grid("oracle", 2, 5));
  ASSERT_EQ(panels.size(), 16u);
  for (const auto& p : panels) {
    EXPECT_EQ(count_of(report::render_svg(p), "class=\"point\""), 1u) << p.title;
  }
}

TEST(Plots, StaleBelowOracleAtEveryNAboveOne) {
  std::vector<EvalReport> reports;
  for (const char* agent : {"oracle", "stale"}) {
    for (auto spec : generalization_manifest(0).specs) {
      spec.agent = agent;
      spec.n_runs = 10;
      spec.episodes_per_run = 100;
      reports.push_back(eval::run_eval(spec));
    }
  }
  const auto panels = report::tmaze_panels(reports);
  ASSERT_FALSE(panels.empty());
  for (const auto& p : panels) {
    ASSERT_EQ(p.series.size(), 2u);
    const auto& oracle = p.series[0].agent == "oracle" ? p.series[0] : p.series[1];
    const auto& stale = p.series[0].agent == "stale" ? p.series[0] : p.series[1];
    ASSERT_EQ(oracle.x, stale.x);
    for (std::size_t i = 0; i < oracle.x.size(); ++i) {
      if (oracle.x[i] > 1) EXPECT_LT(stale.mean[i], oracle.mean[i]) << p.title << " n=" << oracle.x[i];
      else EXPECT_EQ(stale.mean[i], oracle.mean[i]);
    }
  }
}

TEST(Plots, MixedCellsExcluded) {
  eval::EvalSpec spec;
  spec.train_config = make_tmaze_config(5, 5);
  spec.eval_configs = {make_tmaze_config(5, 3), make_tmaze_config(10, 3)};
  spec.n_runs = 1;
  spec.episodes_per_run = 3;
  const auto panels = report::tmaze_panels({eval::run_eval(spec)});
  ASSERT_EQ(panels.size(), 1u);
  EXPECT_EQ(panels[0].series[0].x, (std::vector<double>{3}));
}

TEST(Plots, WrittenAsFiles) {
  const auto dir = fresh_dir("plots");
  const auto written = report::write_plots(report::tmaze_panels(tmaze_grid("oracle", 1, 2)), dir);
  EXPECT_EQ(written.size(), 16u);
  for (const auto& p : written) EXPECT_TRUE(fs::exists(p));
}

TEST(LoadReports, RoundTripAndMalformed) {
  const auto dir = fresh_dir("load");
  const auto reports = tmaze_grid("stale", 2, 5);
  std::ofstream(dir / "a.json") << nlohmann::json(reports).dump();
  std::ofstream(dir / "notes.txt") << "ignored";
  const auto loaded = report::load_reports(dir);
  ASSERT_EQ(loaded.size(), reports.size());
  EXPECT_EQ(loaded, reports);

  std::ofstream(dir / "b.json") << "{\"agent\": 3";
  try {
    report::load_reports(dir);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedReport);
    EXPECT_NE(std::string(e.what()).find("b.json"), std::string::npos);
  }
}

TEST(GridCsv, MeanPlusMinusSem) {
  eval::EvalSpec base;
  base.agent = "oracle";
  base.n_runs = 2;
  base.episodes_per_run = 3;
  const std::vector<EnvConfig> configs{make_tmaze_config(5, 1), make_tmaze_config(5, 3)};
  const auto csv = lines(report::grid_csv(eval::run_generalization_grid(configs, configs, base)));
  ASSERT_EQ(csv.size(), 3u);
  EXPECT_EQ(csv[0], "train,tmaze/fixed/l5/n1,tmaze/fixed/l5/n3");
  EXPECT_EQ(csv[1], "tmaze/fixed/l5/n1,1.00±0.00,1.00±0.00");
}
