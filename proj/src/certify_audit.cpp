#include "paclab/certify/audit.hpp"

#include <cmath>

#include "paclab/core/error.hpp"

namespace paclab::certify {

CertificationReport soundness_audit(
    const Certifier& cert, const std::vector<BatteryEntry>& battery,
    const std::vector<std::uint64_t>& sample_sizes,
    const LearnerErrorEstimate& learner_error, const AuditParams& params,
    const core::RandomSource& rs) {
  if (battery.empty() || sample_sizes.empty()) {
    throw Error("invalid-parameters: empty audit battery");
  }
  CertificationReport report;
  for (std::size_t e = 0; e < battery.size(); ++e) {
    for (std::size_t s = 0; s < sample_sizes.size(); ++s) {
      std::uint64_t salt = 0xAD17u + (static_cast<std::uint64_t>(e) << 20) +
                           (static_cast<std::uint64_t>(s) << 8);
      auto m = static_cast<std::size_t>(sample_sizes[s]);
      MeanEstimate c = expected_certificate(cert, battery[e].dist, m,
                                            params.certificate_trials, rs,
                                            salt, params.parallel);
      MeanEstimate a = learner_error(battery[e].dist, m);
      AuditRow row;
      row.distribution = battery[e].name;
      row.sample_size = sample_sizes[s];
      row.certificate_mean = c.mean;
      row.certificate_se = c.std_error;
      row.learner_error = a.mean;
      row.learner_error_se = a.std_error;
      row.slack = c.mean - a.mean;
      row.tolerance = params.tolerance_sigma *
                      std::sqrt(c.std_error * c.std_error +
                                a.std_error * a.std_error);
      row.sound = row.slack >= -row.tolerance;
      report.all_sound = report.all_sound && row.sound;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace paclab::certify
