#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace paclab::harness {

// Flat key=value configuration. Lines are trimmed; blank lines and lines
// starting with # are skipped; keys may not repeat. Unknown keys are rejected
// by the experiment that consumes the config, so typos fail loudly.
struct Config {
  std::map<std::string, std::string> values;

  bool has(const std::string& key) const;

  std::string get_str(const std::string& key, const std::string& fallback) const;
  std::string require_str(const std::string& key) const;

  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  std::uint64_t require_u64(const std::string& key) const;

  double get_double(const std::string& key, double fallback) const;
  double require_double(const std::string& key) const;

  bool get_bool(const std::string& key, bool fallback) const;

  // Comma-separated unsigned list.
  std::vector<std::uint64_t> get_u64_list(
      const std::string& key, const std::vector<std::uint64_t>& fallback) const;

  // Throws ConfigError when a present key is not in `allowed`.
  void check_keys(const std::vector<std::string>& allowed) const;
};

Config parse_config_text(const std::string& text);
Config load_config_file(const std::string& path);

}  // namespace paclab::harness
