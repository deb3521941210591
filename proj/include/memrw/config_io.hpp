#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "memrw/config.hpp"

namespace memrw {

/// Parses a `key = value` config document. Keys are the EnvConfig field
/// names; '#' starts a comment; blank lines are ignored. Unknown or repeated
/// keys and malformed values throw Error(InvalidConfig). The result is
/// validated.
EnvConfig parse_config(std::string_view text);

/// Reads and parses a config file. A missing file throws Error(InvalidConfig)
/// naming the path.
EnvConfig load_config(const std::filesystem::path& path);

/// Inverse of parse_config for a validated config.
std::string format_config(const EnvConfig& config);

/// Applies one key/value pair to a config (shared by the text and JSON readers).
void set_config_field(EnvConfig& config, std::string_view key, std::string_view value);

}  // namespace memrw
