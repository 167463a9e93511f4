#include "fsind/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace fsind {

Config parse_config(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
  Config c;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_unsigned()) throw std::invalid_argument("config: '" + key + "' must be a non-negative integer");
    const auto v = value.get<std::uint64_t>();
    if (key == "enumeration_bound") {
      c.limits.enumeration_bound = v;
    } else if (key == "index_bound") {
      c.limits.index_bound = v;
    } else if (key == "seed") {
      c.seed = v;
    } else if (key == "threads") {
      c.threads = static_cast<unsigned>(v);
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot read " + path);
  std::stringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::optional<std::string> config_path_from_env() {
  const char* value = std::getenv("FSIND_CONFIG");
  if (!value || !*value) return std::nullopt;
  return std::string(value);
}

Config resolve_config(const std::optional<std::string>& path) {
  if (path) return load_config(*path);
  if (auto env = config_path_from_env()) return load_config(*env);
  return {};
}

}  // namespace fsind
