#include "paclab/certify/certifier.hpp"

#include <cmath>
#include <memory>
#include <utility>
#include <vector>

#include "paclab/core/error.hpp"
#include "paclab/core/parallel.hpp"

namespace paclab::certify {

Certifier make_gated_certifier(unitest::PointSetView y,
                               GatedCertifierParams params) {
  if (params.xi <= 0 || params.xi >= 1) {
    throw Error("invalid-parameters: certifier xi must be in (0, 1)");
  }
  if (params.pass_value <= 0 || params.pass_value > 1) {
    throw Error("invalid-parameters: certificate must be in (0, 1]");
  }
  if (params.domain_size != y.size || params.domain_size == 0) {
    throw Error("invalid-parameters: certifier domain size mismatch");
  }
  return [y = std::move(y), params](const core::PointSeq& sample) {
    if (sample.size() < params.min_sample) return 1.0;
    unitest::TesterParams tp{params.xi, params.xi};
    return unitest::m_test_unif(y, tp, sample).accept ? params.pass_value
                                                      : 1.0;
  };
}

std::uint64_t certifier_gate(std::size_t domain_size, double xi) {
  return unitest::m_test_sample_bound(domain_size, xi / 2, xi);
}

Certifier make_majority_certifier(const construct::RowClass& row, double xi,
                                  std::uint64_t min_sample) {
  if (3 * xi > 1) {
    throw Error("invalid-parameters: majority certificate 3 xi > 1");
  }
  unitest::PointSetView y;
  y.size = static_cast<std::size_t>(row.n());
  std::int64_t n = row.n();
  y.contains = [n](const core::DomainPoint& p) {
    return p.row == n && p.tag == 0 && p.col >= 0 && p.col < n;
  };
  GatedCertifierParams params;
  params.domain_size = y.size;
  params.xi = xi;
  params.pass_value = 3 * xi;
  params.min_sample = min_sample;
  return make_gated_certifier(std::move(y), params);
}

Certifier make_set_certifier(core::PointSeq set_points, double xi,
                             std::uint64_t min_sample) {
  if (6 * xi > 1) {
    throw Error("invalid-parameters: set certificate 6 xi > 1");
  }
  auto y = unitest::PointSetView::of_points(std::move(set_points));
  GatedCertifierParams params;
  params.domain_size = y.size;
  params.xi = xi;
  params.pass_value = 6 * xi;
  params.min_sample = min_sample;
  return make_gated_certifier(std::move(y), params);
}

MeanEstimate expected_certificate(const Certifier& cert,
                                  const core::DiscreteDistribution& d,
                                  std::size_t sample_size,
                                  std::uint64_t trials,
                                  const core::RandomSource& rs,
                                  std::uint64_t salt, bool parallel) {
  if (trials == 0) throw Error("invalid-parameters: zero trials");
  std::vector<double> slot(trials);
  core::for_each_trial(trials, parallel, [&](std::uint64_t i) {
    core::Rng rng = rs.stream(salt, i);
    core::PointSeq sample = d.sample_many(sample_size, rng);
    slot[i] = cert(sample);
  });
  double sum = 0;
  for (double v : slot) sum += v;
  MeanEstimate est;
  est.trials = trials;
  est.mean = sum / static_cast<double>(trials);
  est.std_error = std::sqrt(std::max(0.0, est.mean * (1.0 - est.mean)) /
                            static_cast<double>(trials));
  return est;
}

}  // namespace paclab::certify
