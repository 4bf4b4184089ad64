#pragma once

#include <string>
#include <vector>

#include "paclab/certify/audit.hpp"
#include "paclab/core/distribution.hpp"
#include "paclab/harness/config.hpp"
#include "paclab/harness/emit.hpp"

namespace paclab::harness {

// Probe distributions shared by the certificate, tester and audit surfaces:
// `uniform` on the support, `half-support` on its first half, `point-mass` on
// its first point, and `off-mix`, which keeps 0.6 uniform on the support and
// parks 0.4 on the off point.
core::DiscreteDistribution probe_distribution(const std::string& name,
                                              const core::PointSeq& support,
                                              const core::DomainPoint& off);

// Audit experiments also surface the full soundness report so the CLI can
// print per-distribution verdicts next to the CSV rows.
struct AuditOutcome {
  certify::CertificationReport report;
  std::vector<ResultRow> rows;
  std::string kind;
};

AuditOutcome run_audit_experiment(const Config& cfg);

// Dispatches on the required `experiment` key. Every experiment validates its
// key set strictly, so unknown or misspelled keys raise a config error.
// Recognized experiments: error-rate, separation, certificate, tester-rates,
// audit, transductive.
std::vector<ResultRow> run_experiment(const Config& cfg);

}  // namespace paclab::harness
