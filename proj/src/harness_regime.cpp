#include "paclab/harness/regime.hpp"

#include <algorithm>
#include <cmath>

#include "paclab/core/error.hpp"
#include "paclab/unitest/collision.hpp"

namespace paclab::harness {

RegimeReport check_regime(double beta, const std::vector<std::uint64_t>& ns) {
  if (!(beta > 0) || !(beta < 0.125)) {
    throw Error("invalid-parameters: beta must lie in (0, 1/8)");
  }
  if (ns.empty()) throw Error("invalid-parameters: no sizes given");
  RegimeReport report;
  report.beta = beta;
  for (std::uint64_t n : ns) {
    if (n < 4) throw Error("invalid-parameters: regime sizes need n >= 4");
    RegimeRow row;
    row.n = n;
    long double nl = static_cast<long double>(n);
    row.minority =
        static_cast<std::uint64_t>(std::ceil(std::pow(nl, 1.0L - beta)));
    row.minority = std::max<std::uint64_t>(1, row.minority);
    row.train_size =
        static_cast<std::uint64_t>(std::floor(std::pow(nl, 0.5L + 3 * beta)));
    row.xi = static_cast<double>(row.minority) / static_cast<double>(n);
    if (row.xi >= 1.0) {
      throw Error("invalid-parameters: regime needs n large enough for xi < 1");
    }
    // The gated tester halves xi internally; the certifier gate accounts for
    // that and uses confidence xi as well.
    row.tester_gate = unitest::m_test_sample_bound(
        static_cast<std::size_t>(n), row.xi / 2, row.xi);
    row.gate_ratio = static_cast<double>(row.train_size) /
                     static_cast<double>(row.tester_gate);
    row.gate_met = row.train_size >= row.tester_gate;
    report.rows.push_back(row);
  }
  report.gate_met_at_largest =
      std::max_element(report.rows.begin(), report.rows.end(),
                       [](const RegimeRow& a, const RegimeRow& b) {
                         return a.n < b.n;
                       })
          ->gate_met;
  return report;
}

}  // namespace paclab::harness
