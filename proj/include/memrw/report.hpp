#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "memrw/eval.hpp"

namespace memrw::report {

/// Fixed two-decimal formatting used in every table.
std::string fixed2(double value);

std::string csv_header();
/// One CSV row per (eval config, agent) of the report.
std::string csv_rows(const EvalReport& report);
std::string to_csv(const std::vector<EvalReport>& reports);

/// Train config rows x eval config columns of "mean+-sem" cells.
std::string grid_csv(const eval::GeneralizationGrid& grid);

/// T-Maze matched results, rows = regime x l x n, one column per agent.
/// Returns just the header when no T-Maze matched cells exist.
std::string tmaze_table_csv(const std::vector<EvalReport>& reports);
/// Color-Cubes matched results, rows = mode, one column per agent.
std::string cubes_table_csv(const std::vector<EvalReport>& reports);

/// A single panel: success rate vs eval corridor count for one train config,
/// one polyline per agent with SEM error bars.
struct PlotSeries {
  std::string agent;
  std::vector<double> x;
  std::vector<double> mean;
  std::vector<double> sem;
};
struct PlotPanel {
  std::string title;
  std::vector<PlotSeries> series;
};

/// Groups T-Maze reports by train config (excluding Mixed cells), one panel
/// per train config, points sorted by eval n.
std::vector<PlotPanel> tmaze_panels(const std::vector<EvalReport>& reports);

std::string render_svg(const PlotPanel& panel);

/// Writes one SVG per panel into `dir`; returns the written paths.
std::vector<std::filesystem::path> write_plots(const std::vector<PlotPanel>& panels,
                                               const std::filesystem::path& dir);

/// Reads every *.json EvalReport array or object in `dir`, sorted by file
/// name. Throws Error(MalformedReport) on parse failures.
std::vector<EvalReport> load_reports(const std::filesystem::path& dir);

}  // namespace memrw::report
