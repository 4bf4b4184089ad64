#pragma once

#include <cstdint>
#include <vector>

namespace paclab::harness {

// Scaling schedule tying every knob to one size parameter n and an exponent
// beta in (0, 1/8): the class carries ceil(n^(1-beta)) minority points, the
// learner trains on floor(n^(1/2+3*beta)) draws, and the certified level
// tracks xi = ceil(n^(1-beta)) / n. The report compares the training size
// against the uniformity tester's sample bound at that xi to show where the
// certified regime switches on.
struct RegimeRow {
  std::uint64_t n = 0;
  std::uint64_t minority = 0;      // ceil(n^(1-beta))
  std::uint64_t train_size = 0;    // floor(n^(1/2+3*beta))
  double xi = 0;                   // minority / n
  std::uint64_t tester_gate = 0;   // gated sample bound at xi
  double gate_ratio = 0;           // train_size / tester_gate
  bool gate_met = false;
};

struct RegimeReport {
  double beta = 0;
  std::vector<RegimeRow> rows;
  bool gate_met_at_largest = false;
};

RegimeReport check_regime(double beta, const std::vector<std::uint64_t>& ns);

}  // namespace paclab::harness
