#include "paclab/harness/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "paclab/core/error.hpp"

namespace paclab::harness {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

bool Config::has(const std::string& key) const { return values.count(key) > 0; }

std::string Config::get_str(const std::string& key,
                            const std::string& fallback) const {
  auto it = values.find(key);
  return it == values.end() ? fallback : it->second;
}

std::string Config::require_str(const std::string& key) const {
  auto it = values.find(key);
  if (it == values.end()) throw ConfigError("missing config key: " + key);
  return it->second;
}

std::uint64_t Config::get_u64(const std::string& key,
                              std::uint64_t fallback) const {
  return has(key) ? require_u64(key) : fallback;
}

std::uint64_t Config::require_u64(const std::string& key) const {
  std::string raw = require_str(key);
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(raw, &used);
    if (used != raw.size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key " + key + " needs an unsigned integer, got '" +
                      raw + "'");
  }
}

double Config::get_double(const std::string& key, double fallback) const {
  return has(key) ? require_double(key) : fallback;
}

double Config::require_double(const std::string& key) const {
  std::string raw = require_str(key);
  try {
    std::size_t used = 0;
    double v = std::stod(raw, &used);
    if (used != raw.size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key " + key + " needs a number, got '" + raw +
                      "'");
  }
}

bool Config::get_bool(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  std::string raw = require_str(key);
  if (raw == "1" || raw == "true" || raw == "yes") return true;
  if (raw == "0" || raw == "false" || raw == "no") return false;
  throw ConfigError("config key " + key + " needs a boolean, got '" + raw +
                    "'");
}

std::vector<std::uint64_t> Config::get_u64_list(
    const std::string& key, const std::vector<std::uint64_t>& fallback) const {
  if (!has(key)) return fallback;
  std::vector<std::uint64_t> out;
  std::stringstream ss(require_str(key));
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("config key " + key + " has a bad list entry '" +
                        item + "'");
    }
  }
  if (out.empty()) throw ConfigError("config key " + key + " is empty");
  return out;
}

void Config::check_keys(const std::vector<std::string>& allowed) const {
  for (const auto& [key, value] : values) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError("unknown config key: " + key);
    }
  }
}

Config parse_config_text(const std::string& text) {
  Config cfg;
  std::stringstream ss(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        " is not key=value: " + line);
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        " has an empty key");
    }
    if (!cfg.values.emplace(key, value).second) {
      throw ConfigError("duplicate config key: " + key);
    }
  }
  return cfg;
}

Config load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

}  // namespace paclab::harness
