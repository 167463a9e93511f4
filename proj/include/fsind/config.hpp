#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "fsind/limits.hpp"

namespace fsind {

/// Run-time settings. Defaults: 10^6 elements, index 10^5, seed 1, threads = hardware.
struct Config {
  Limits limits;
  std::uint64_t seed = 1;
  /// 0 means the available hardware parallelism.
  unsigned threads = 0;
};

/**
 * Reads a JSON object with any of the keys enumeration_bound, index_bound,
 * seed and threads; missing keys keep their defaults. Unknown keys and
 * wrongly typed values are errors (std::invalid_argument).
 */
Config load_config(const std::string& path);
Config parse_config(const std::string& json_text);

/// Value of FSIND_CONFIG, if set and non-empty.
std::optional<std::string> config_path_from_env();

/// Config from `path` if given, else from FSIND_CONFIG, else the defaults.
Config resolve_config(const std::optional<std::string>& path);

}  // namespace fsind
