#include "paclab/harness/emit.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <tuple>

#include <json.hpp>

#include "paclab/core/error.hpp"

namespace paclab::harness {
namespace {

auto row_key(const ResultRow& r) {
  return std::tie(r.experiment, r.cls, r.distribution, r.m, r.trials,
                  r.estimate, r.ci_half_width, r.seed, r.regime_mode);
}

void check_field(const std::string& s) {
  // Commas and newlines would corrupt the fixed-column CSV layout, and no
  // legitimate experiment name contains them.
  if (s.find(',') != std::string::npos || s.find('\n') != std::string::npos) {
    throw Error("invalid-parameters: output field contains ',' or newline");
  }
}

void sort_rows(std::vector<ResultRow>& rows) {
  std::sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
    return row_key(a) < row_key(b);
  });
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string to_csv(std::vector<ResultRow> rows) {
  sort_rows(rows);
  std::string out =
      "experiment,class,distribution,m,trials,estimate,ci_half_width,seed,"
      "regime_mode\n";
  for (const ResultRow& r : rows) {
    check_field(r.experiment);
    check_field(r.cls);
    check_field(r.distribution);
    check_field(r.regime_mode);
    out += r.experiment;
    out += ',';
    out += r.cls;
    out += ',';
    out += r.distribution;
    out += ',';
    out += std::to_string(r.m);
    out += ',';
    out += std::to_string(r.trials);
    out += ',';
    out += format_double(r.estimate);
    out += ',';
    out += format_double(r.ci_half_width);
    out += ',';
    out += std::to_string(r.seed);
    out += ',';
    out += r.regime_mode;
    out += '\n';
  }
  return out;
}

std::string to_json(std::vector<ResultRow> rows) {
  sort_rows(rows);
  nlohmann::json arr = nlohmann::json::array();
  for (const ResultRow& r : rows) {
    arr.push_back({{"experiment", r.experiment},
                   {"class", r.cls},
                   {"distribution", r.distribution},
                   {"m", r.m},
                   {"trials", r.trials},
                   {"estimate", r.estimate},
                   {"ci_half_width", r.ci_half_width},
                   {"seed", r.seed},
                   {"regime_mode", r.regime_mode}});
  }
  return arr.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("solver-failure: cannot open output file " + path);
  }
  out << content;
  if (!out.good()) {
    throw Error("solver-failure: short write to " + path);
  }
}

}  // namespace paclab::harness
