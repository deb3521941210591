#include "memrw/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "memrw/episode.hpp"
#include "memrw/error.hpp"

namespace memrw::report {

std::string fixed2(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

namespace {

std::string mean_pm_sem(double mean, double sem) { return fixed2(mean) + "±" + fixed2(sem); }

std::string csv_row(const EvalReport& r, const eval::EvalCell& c) {
  const EnvConfig& cfg = c.config;
  const bool tm = cfg.family == Family::TMaze;
  std::ostringstream out;
  out << r.agent << ',' << to_string(cfg.family) << ','
      << (tm ? std::string(to_string(cfg.effective_regime())) : "") << ','
      << (tm ? std::to_string(cfg.corridor_length) : "") << ','
      << (tm ? std::to_string(cfg.corridor_count) : "") << ','
      << (tm ? "" : std::to_string(cfg.grid_size)) << ','
      << (tm ? "" : std::to_string(cfg.cube_count)) << ','
      << (tm ? "" : std::to_string(cfg.subepisode_count)) << ','
      << (tm ? "" : fixed2(cfg.teleport_prob)) << ','
      << (tm ? "" : std::string(to_string(cfg.mode))) << ',' << config_label(r.train_config) << ','
      << to_string(c.tag) << ',' << fixed2(c.success_mean) << ',' << fixed2(c.success_sem) << ','
      << fixed2(c.mean_progress) << ',' << r.n_runs << ',' << r.episodes_per_run << '\n';
  return out.str();
}

std::vector<std::string> agents_in_order(const std::vector<EvalReport>& reports) {
  std::vector<std::string> agents;
  for (const auto& r : reports) {
    if (std::find(agents.begin(), agents.end(), r.agent) == agents.end()) agents.push_back(r.agent);
  }
  return agents;
}

}  // namespace

std::string csv_header() {
  return "agent,family,regime,l,n,grid_size,cube_count,subepisodes,teleport_prob,mode,train,tag,"
         "success_mean,success_sem,mean_progress,n_runs,episodes_per_run\n";
}

std::string csv_rows(const EvalReport& report) {
  std::string out;
  for (const auto& c : report.cells) out += csv_row(report, c);
  return out;
}

std::string to_csv(const std::vector<EvalReport>& reports) {
  std::string out = csv_header();
  for (const auto& r : reports) out += csv_rows(r);
  return out;
}

std::string grid_csv(const eval::GeneralizationGrid& grid) {
  std::vector<std::string> columns;
  for (const auto& row : grid.rows) {
    for (const auto& c : row.cells) {
      const auto label = config_label(c.config);
      if (std::find(columns.begin(), columns.end(), label) == columns.end()) columns.push_back(label);
    }
  }
  std::ostringstream out;
  out << "train";
  for (const auto& c : columns) out << ',' << c;
  out << '\n';
  for (const auto& row : grid.rows) {
    out << config_label(row.train_config);
    for (const auto& col : columns) {
      out << ',';
      for (const auto& c : row.cells) {
        if (config_label(c.config) == col) out << mean_pm_sem(c.success_mean, c.success_sem);
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string tmaze_table_csv(const std::vector<EvalReport>& reports) {
  const auto agents = agents_in_order(reports);
  using Key = std::tuple<int, int, int>;  // regime, l, n
  std::map<Key, std::map<std::string, std::string>> table;
  for (const auto& r : reports) {
    for (const auto& c : r.cells) {
      if (c.config.family != Family::TMaze || c.tag != eval::Generalization::Matched) continue;
      const Key key{static_cast<int>(c.config.effective_regime()), c.config.corridor_length,
                    c.config.corridor_count};
      table[key][r.agent] = mean_pm_sem(c.success_mean, c.success_sem);
    }
  }
  std::ostringstream out;
  out << "regime,l,n";
  for (const auto& a : agents) out << ',' << a;
  out << '\n';
  for (const auto& [key, values] : table) {
    const auto [regime, l, n] = key;
    out << to_string(static_cast<Regime>(regime)) << ',' << l << ',' << n;
    for (const auto& a : agents) {
      auto it = values.find(a);
      out << ',' << (it == values.end() ? "" : it->second);
    }
    out << '\n';
  }
  return out.str();
}

std::string cubes_table_csv(const std::vector<EvalReport>& reports) {
  std::vector<std::string> agents;
  std::map<int, std::map<std::string, std::string>> table;
  for (const auto& r : reports) {
    for (const auto& c : r.cells) {
      if (c.config.family != Family::ColorCubes || c.tag != eval::Generalization::Matched) continue;
      if (std::find(agents.begin(), agents.end(), r.agent) == agents.end()) agents.push_back(r.agent);
      table[static_cast<int>(c.config.mode)][r.agent] = mean_pm_sem(c.success_mean, c.success_sem);
    }
  }
  std::ostringstream out;
  out << "mode";
  for (const auto& a : agents) out << ',' << a;
  out << '\n';
  for (const auto& [mode, values] : table) {
    out << to_string(static_cast<Mode>(mode));
    for (const auto& a : agents) {
      auto it = values.find(a);
      out << ',' << (it == values.end() ? "" : it->second);
    }
    out << '\n';
  }
  return out.str();
}

std::vector<PlotPanel> tmaze_panels(const std::vector<EvalReport>& reports) {
  std::map<std::string, PlotPanel> panels;
  std::vector<std::string> order;
  for (const auto& r : reports) {
    if (r.train_config.family != Family::TMaze) continue;
    const auto title = "train " + config_label(r.train_config);
    if (!panels.contains(title)) {
      order.push_back(title);
      panels[title].title = title;
    }
    std::vector<const eval::EvalCell*> cells;
    for (const auto& c : r.cells) {
      if (c.tag != eval::Generalization::Mixed) cells.push_back(&c);
    }
    std::sort(cells.begin(), cells.end(), [](const auto* a, const auto* b) {
      return a->config.corridor_count < b->config.corridor_count;
    });
    PlotSeries series;
    series.agent = r.agent;
    for (const auto* c : cells) {
      series.x.push_back(c->config.corridor_count);
      series.mean.push_back(c->success_mean);
      series.sem.push_back(c->success_sem);
    }
    panels[title].series.push_back(std::move(series));
  }
  std::vector<PlotPanel> out;
  for (const auto& t : order) out.push_back(panels[t]);
  return out;
}

std::string render_svg(const PlotPanel& panel) {
  constexpr double kW = 420, kH = 300, kLeft = 50, kRight = 20, kTop = 30, kBottom = 40;
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd"};
  double x_min = 1e9, x_max = -1e9;
  for (const auto& s : panel.series) {
    for (double x : s.x) {
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
    }
  }
  if (x_min > x_max) x_min = 0, x_max = 1;
  if (x_min == x_max) x_min -= 1, x_max += 1;
  auto px = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * (kW - kLeft - kRight); };
  auto py = [&](double y) { return kTop + (1.0 - y) * (kH - kTop - kBottom); };

  std::ostringstream out;
  char buf[256];
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  out << "<text x=\"" << kW / 2 << "\" y=\"18\" text-anchor=\"middle\">" << panel.title << "</text>\n";
  std::snprintf(buf, sizeof buf,
                "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n", kLeft,
                py(0), kW - kRight, py(0));
  out << buf;
  std::snprintf(buf, sizeof buf,
                "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n", kLeft,
                py(0), kLeft, py(1));
  out << buf;
  for (double y : {0.0, 0.5, 1.0}) {
    std::snprintf(buf, sizeof buf, "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"end\">%.1f</text>\n",
                  kLeft - 4, py(y) + 4, y);
    out << buf;
  }
  out << "<text x=\"" << kW / 2 << "\" y=\"" << kH - 8 << "\" text-anchor=\"middle\">eval n</text>\n";
  for (std::size_t si = 0; si < panel.series.size(); ++si) {
    const auto& s = panel.series[si];
    const char* color = kColors[si % 5];
    std::string points;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.1f,%.1f ", px(s.x[i]), py(s.mean[i]));
      points += buf;
      std::snprintf(buf, sizeof buf,
                    "<line class=\"errorbar\" x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                    "stroke=\"%s\"/>\n",
                    px(s.x[i]), py(std::min(1.0, s.mean[i] + s.sem[i])), px(s.x[i]),
                    py(std::max(0.0, s.mean[i] - s.sem[i])), color);
      out << buf;
      std::snprintf(buf, sizeof buf,
                    "<circle class=\"point\" data-agent=\"%s\" data-x=\"%g\" data-mean=\"%.4f\" "
                    "cx=\"%.1f\" cy=\"%.1f\" r=\"3\" fill=\"%s\"/>\n",
                    s.agent.c_str(), s.x[i], s.mean[i], px(s.x[i]), py(s.mean[i]), color);
      out << buf;
    }
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"" << points << "\"/>\n";
    out << "<text x=\"" << kW - kRight - 60 << "\" y=\"" << kTop + 14 * (si + 1) << "\" fill=\""
        << color << "\">" << s.agent << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::vector<std::filesystem::path> write_plots(const std::vector<PlotPanel>& panels,
                                               const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  for (const auto& panel : panels) {
    std::string name = panel.title;
    for (char& ch : name) {
      if (ch == '/' || ch == ' ') ch = '_';
    }
    const auto path = dir / (name + ".svg");
    std::ofstream(path) << render_svg(panel);
    written.push_back(path);
  }
  return written;
}

std::vector<EvalReport> load_reports(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw Error(ErrorCode::MalformedReport, "not a directory: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<EvalReport> reports;
  for (const auto& f : files) {
    try {
      std::ifstream in(f);
      nlohmann::json j;
      in >> j;
      if (j.is_array()) {
        for (const auto& item : j) reports.push_back(item.get<EvalReport>());
      } else {
        reports.push_back(j.get<EvalReport>());
      }
    } catch (const std::exception& e) {
      throw Error(ErrorCode::MalformedReport, f.string() + ": " + e.what());
    }
  }
  return reports;
}

}  // namespace memrw::report
