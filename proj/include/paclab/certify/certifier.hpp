#pragma once

#include <cstdint>
#include <functional>

#include "paclab/construct/row_class.hpp"
#include "paclab/core/distribution.hpp"
#include "paclab/core/random.hpp"
#include "paclab/unitest/collision.hpp"

namespace paclab::certify {

// A certifier maps an unlabeled sample to a certified error level in (0, 1].
// Soundness target: its expectation dominates the certified learner's error
// under the sampled distribution.
using Certifier = std::function<double(const core::PointSeq&)>;

struct GatedCertifierParams {
  std::size_t domain_size = 0;   // |Y|, the uniformity reference set
  double xi = 0;                 // tester distance scale
  double pass_value = 0;         // certificate when gate and test both pass
  std::uint64_t min_sample = 0;  // below this the certifier stays at 1
};

// pass_value when the sample reaches min_sample and the membership-gated
// uniformity test (distance xi, confidence xi) accepts; 1 otherwise.
Certifier make_gated_certifier(unitest::PointSetView y,
                               GatedCertifierParams params);

// Sample size at which the gated tester's guarantee kicks in for a reference
// set of this size (the gated test runs at xi/2 internally).
std::uint64_t certifier_gate(std::size_t domain_size, double xi);

// Row-domain certifier for the majority-vote learner: certificate 3 xi
// against the uniform row; requires 3 xi <= 1.
Certifier make_majority_certifier(const construct::RowClass& row, double xi,
                                  std::uint64_t min_sample);

// Fixed-set certifier for validated designated-member learners: certificate
// 6 xi against the uniform distribution on the given points; 6 xi <= 1.
Certifier make_set_certifier(core::PointSeq set_points, double xi,
                             std::uint64_t min_sample);

struct MeanEstimate {
  double mean = 0;
  double std_error = 0;
  std::uint64_t trials = 0;
};

// Monte-Carlo mean of the certificate over samples of sample_size iid draws
// from d. Trials are stream-per-index, so worker count cannot change the
// result. The reported standard error uses the mean(1-mean) bound, which
// dominates the variance of any [0,1] variable.
MeanEstimate expected_certificate(const Certifier& cert,
                                  const core::DiscreteDistribution& d,
                                  std::size_t sample_size,
                                  std::uint64_t trials,
                                  const core::RandomSource& rs,
                                  std::uint64_t salt, bool parallel);

}  // namespace paclab::certify
