#pragma once

#include <string>
#include <vector>

#include "paclab/certify/certifier.hpp"

namespace paclab::certify {

// One probe distribution for the audit battery.
struct BatteryEntry {
  std::string name;
  core::DiscreteDistribution dist;
};

// Estimate of the certified learner's error under a battery distribution at a
// given training size; supplied by the caller so the audit stays agnostic of
// the learner stack.
using LearnerErrorEstimate = std::function<MeanEstimate(
    const core::DiscreteDistribution& dist, std::size_t sample_size)>;

struct AuditRow {
  std::string distribution;
  std::uint64_t sample_size = 0;
  double certificate_mean = 0;
  double certificate_se = 0;
  double learner_error = 0;
  double learner_error_se = 0;
  double slack = 0;       // certificate_mean - learner_error
  double tolerance = 0;   // sigma multiple of the combined standard error
  bool sound = false;     // slack >= -tolerance
};

struct CertificationReport {
  std::vector<AuditRow> rows;
  bool all_sound = true;
};

struct AuditParams {
  std::uint64_t certificate_trials = 40;
  double tolerance_sigma = 3.0;
  bool parallel = true;
};

// Soundness probe: over every battery distribution and training size, the
// mean certificate must not fall below the learner's estimated error by more
// than the combined noise allows.
CertificationReport soundness_audit(
    const Certifier& cert, const std::vector<BatteryEntry>& battery,
    const std::vector<std::uint64_t>& sample_sizes,
    const LearnerErrorEstimate& learner_error, const AuditParams& params,
    const core::RandomSource& rs);

}  // namespace paclab::certify
