#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace paclab::harness {

// One output record. The CSV column order is fixed and part of the tool's
// interface: experiment, class, distribution, m, trials, estimate,
// ci_half_width, seed, regime_mode.
struct ResultRow {
  std::string experiment;
  std::string cls;
  std::string distribution;
  std::uint64_t m = 0;
  std::uint64_t trials = 0;
  double estimate = 0;
  double ci_half_width = 0;
  std::uint64_t seed = 0;
  std::string regime_mode;
};

// Shortest %.10g rendering; used everywhere a float reaches an output file so
// reruns stay byte-identical.
std::string format_double(double v);

// Rows are sorted by the full column tuple before rendering, so the emitted
// bytes depend only on the row multiset.
std::string to_csv(std::vector<ResultRow> rows);
std::string to_json(std::vector<ResultRow> rows);

void write_file(const std::string& path, const std::string& content);

}  // namespace paclab::harness
