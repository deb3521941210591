#include "memrw/config_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "memrw/error.hpp"

namespace memrw {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc{} || ptr != end) {
    throw Error(ErrorCode::InvalidConfig,
                "bad value '" + std::string(value) + "' for key '" + std::string(key) + "'");
  }
  return out;
}

double parse_double(std::string_view key, std::string_view value) {
  // std::from_chars for double is not available on every toolchain we build with.
  std::string s(value);
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) {
    throw Error(ErrorCode::InvalidConfig,
                "bad value '" + s + "' for key '" + std::string(key) + "'");
  }
  return out;
}

}  // namespace

void set_config_field(EnvConfig& c, std::string_view key, std::string_view value) {
  if (key == "family") c.family = parse_family(value);
  else if (key == "regime") c.regime = parse_regime(value);
  else if (key == "corridor_length") c.corridor_length = parse_number<int>(key, value);
  else if (key == "corridor_count") c.corridor_count = parse_number<int>(key, value);
  else if (key == "grid_size") c.grid_size = parse_number<int>(key, value);
  else if (key == "cube_count") c.cube_count = parse_number<int>(key, value);
  else if (key == "subepisode_count") c.subepisode_count = parse_number<int>(key, value);
  else if (key == "teleport_prob") c.teleport_prob = parse_double(key, value);
  else if (key == "mode") c.mode = parse_mode(value);
  else if (key == "target_resampling") c.target_resampling = parse_target_resampling(value);
  else if (key == "max_steps") c.max_steps = parse_number<int>(key, value);
  else if (key == "seed") c.seed = parse_number<std::uint64_t>(key, value);
  else throw Error(ErrorCode::InvalidConfig, "unknown config key '" + std::string(key) + "'");
}

EnvConfig parse_config(std::string_view text) {
  EnvConfig config;
  std::set<std::string, std::less<>> seen;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::InvalidConfig,
                  "line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (!seen.emplace(key).second) {
      throw Error(ErrorCode::InvalidConfig, "duplicate key '" + std::string(key) + "'");
    }
    set_config_field(config, key, value);
  }
  return validate_config(config);
}

EnvConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidConfig, "cannot open config file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::string format_config(const EnvConfig& c) {
  std::ostringstream out;
  out << "family = " << to_string(c.family) << "\n";
  if (c.family == Family::TMaze) {
    out << "regime = " << to_string(c.effective_regime()) << "\n"
        << "corridor_length = " << c.corridor_length << "\n"
        << "corridor_count = " << c.corridor_count << "\n";
  } else {
    out << "mode = " << to_string(c.mode) << "\n"
        << "grid_size = " << c.grid_size << "\n"
        << "cube_count = " << c.cube_count << "\n"
        << "subepisode_count = " << c.subepisode_count << "\n"
        << "teleport_prob = " << c.teleport_prob << "\n"
        << "target_resampling = " << to_string(c.target_resampling) << "\n";
  }
  if (c.max_steps) out << "max_steps = " << *c.max_steps << "\n";
  out << "seed = " << c.seed << "\n";
  return out.str();
}

}  // namespace memrw
